#include "zetalab/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "zetalab/errors.hpp"

namespace zetalab {

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(const std::string& text) {
    mpq_init(q_);
    if (mpq_set_str(q_, text.c_str(), 10) != 0) {
        mpq_clear(q_);
        throw ValidationError("Rational: cannot parse \"" + text + "\"");
    }
    if (mpz_sgn(mpq_denref(q_)) == 0) {
        mpq_clear(q_);
        throw DomainError("Rational: zero denominator in \"" + text + "\"");
    }
    mpq_canonicalize(q_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("Rational: division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rational Rational::floor() const {
    Rational r;
    mpz_t f;
    mpz_init(f);
    mpz_fdiv_q(f, mpq_numref(q_), mpq_denref(q_));
    mpq_set_z(r.q_, f);
    mpz_clear(f);
    return r;
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw DomainError("Rational: 0 to a negative power");
    Rational base = (e > 0) ? *this : Rational(1) / *this;
    unsigned long n = (e > 0) ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

long Rational::to_long() const {
    if (!is_integer()) throw DomainError("Rational::to_long: not an integer");
    if (!mpz_fits_slong_p(mpq_numref(q_)))
        throw ResourceError("Rational::to_long: value does not fit in a long");
    return mpz_get_si(mpq_numref(q_));
}

std::string Rational::str() const {
    char* s = mpq_get_str(nullptr, 10, q_);
    std::string out(s);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial_r(unsigned long n) {
    Rational r;
    mpz_t f;
    mpz_init(f);
    mpz_fac_ui(f, n);
    mpq_set_z(r.raw(), f);
    mpz_clear(f);
    return r;
}

Rational binomial_r(unsigned long n, unsigned long k) {
    Rational r;
    if (k > n) return Rational(0);
    mpz_t b;
    mpz_init(b);
    mpz_bin_uiui(b, n, k);
    mpq_set_z(r.raw(), b);
    mpz_clear(b);
    return r;
}

} // namespace zetalab
