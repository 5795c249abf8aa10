#include "zetalab/dirichlet.hpp"

#include <fstream>
#include <numeric>

#include <json.hpp>

#include "zetalab/bernoulli.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

long gcd_long(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void validate_table(long modulus, const std::vector<int>& table) {
    if (modulus < 1) throw ValidationError("character: modulus must be positive");
    if (static_cast<long>(table.size()) != modulus)
        throw ValidationError("character: table length must equal the modulus");
    for (long a = 0; a < modulus; ++a) {
        int v = table[static_cast<size_t>(a)];
        if (v < -1 || v > 1)
            throw ValidationError("character: realness violated, values must be in {-1,0,1}");
        bool unit = (modulus == 1) || (gcd_long(a, modulus) == 1);
        if (unit && v == 0)
            throw ValidationError("character: support violated, chi(a)=0 on a unit a=" +
                                  std::to_string(a));
        if (!unit && v != 0)
            throw ValidationError("character: support violated, chi(a)!=0 with gcd(a,L)>1 at a=" +
                                  std::to_string(a));
    }
    for (long a = 0; a < modulus; ++a)
        for (long b = a; b < modulus; ++b) {
            long ab = (a * b) % modulus;
            if (table[static_cast<size_t>(ab)] !=
                table[static_cast<size_t>(a)] * table[static_cast<size_t>(b)])
                throw ValidationError("character: multiplicativity violated at a=" +
                                      std::to_string(a) + ", b=" + std::to_string(b));
        }
}

bool table_is_principal(long modulus, const std::vector<int>& table) {
    for (long a = 0; a < modulus; ++a) {
        bool unit = (modulus == 1) || (gcd_long(a, modulus) == 1);
        if (unit && table[static_cast<size_t>(a)] != 1) return false;
    }
    return true;
}

} // namespace

Rational DirichletCharacter::operator()(long a) const {
    long r = a % modulus_;
    if (r < 0) r += modulus_;
    return Rational(values_[static_cast<size_t>(r)]);
}

std::string DirichletCharacter::describe() const {
    std::string s = "chi mod " + std::to_string(modulus_) + " [";
    for (size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values_[i]);
    }
    return s + "]";
}

DirichletCharacter make_character(long modulus, const std::vector<int>& table,
                                  bool require_nonprincipal) {
    validate_table(modulus, table);
    bool principal = table_is_principal(modulus, table);
    if (require_nonprincipal && principal)
        throw ValidationError("character: principal table where a nonprincipal character "
                              "was required");
    return DirichletCharacter(modulus, table, principal);
}

int kronecker_symbol(long d, long n) {
    if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (d < 0) result = -result;
    }
    while (n % 2 == 0) { // (d | 2) factors
        n /= 2;
        if (d % 2 == 0) return 0;
        long dm8 = ((d % 8) + 8) % 8;
        if (dm8 == 3 || dm8 == 5) result = -result;
    }
    if (n == 1) return result;
    // Jacobi symbol (d mod n | n) for odd n > 1, by quadratic reciprocity
    long num = ((d % n) + n) % n;
    long den = n;
    while (num != 0) {
        while (num % 2 == 0) {
            num /= 2;
            long r = den % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(num, den);
        if (num % 4 == 3 && den % 4 == 3) result = -result;
        num %= den;
    }
    if (den != 1) return 0; // gcd(d, n) > 1
    return result;
}

DirichletCharacter make_character_quadratic(long discriminant, bool require_nonprincipal) {
    if (discriminant == 0) throw ValidationError("character: discriminant must be nonzero");
    long modulus = discriminant < 0 ? -discriminant : discriminant;
    std::vector<int> table(static_cast<size_t>(modulus));
    for (long a = 0; a < modulus; ++a) table[static_cast<size_t>(a)] = kronecker_symbol(discriminant, a);
    if (modulus == 1) table[0] = 1;
    return make_character(modulus, table, require_nonprincipal);
}

DirichletCharacter load_character_json(const std::string& path, bool require_nonprincipal) {
    std::ifstream in(path);
    if (!in) throw ValidationError("character: cannot open file " + path);
    nlohmann::json j;
    in >> j;
    if (!j.contains("modulus") || !j.contains("values"))
        throw ValidationError("character: JSON must contain \"modulus\" and \"values\"");
    long modulus = j["modulus"].get<long>();
    std::vector<int> table = j["values"].get<std::vector<int>>();
    return make_character(modulus, table, require_nonprincipal);
}

std::vector<DirichletCharacter> enumerate_real_characters(long modulus, bool include_principal) {
    if (modulus < 1) throw ValidationError("character: modulus must be positive");
    std::vector<long> units;
    for (long a = 0; a < modulus; ++a)
        if (modulus == 1 || gcd_long(a, modulus) == 1) units.push_back(a);

    std::vector<DirichletCharacter> found;
    size_t nu = units.size();
    for (unsigned long mask = 0; mask < (1ul << nu); ++mask) {
        std::vector<int> table(static_cast<size_t>(modulus), 0);
        for (size_t i = 0; i < nu; ++i)
            table[static_cast<size_t>(units[i])] = (mask >> i) & 1 ? -1 : 1;
        if (modulus == 1) table[0] = 1;
        try {
            DirichletCharacter chi = make_character(modulus, table, false);
            if (!include_principal && chi.is_principal()) continue;
            found.push_back(chi);
        } catch (const ValidationError&) {
            continue; // not multiplicative
        }
        if (modulus == 1) break;
    }
    return found;
}

Rational generalized_bernoulli(unsigned long n, const DirichletCharacter& chi) {
    long L = chi.modulus();
    Rational acc(0);
    for (long a = 1; a <= L; ++a) {
        Rational c = chi(a);
        if (c.is_zero()) continue;
        acc += c * bernoulli_poly(n, Rational(a, L));
    }
    return Rational(L).pow_int(static_cast<long>(n) - 1) * acc;
}

} // namespace zetalab
