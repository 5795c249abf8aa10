#pragma once

#include <string>
#include <vector>

#include "zetalab/rational.hpp"

namespace zetalab {

// Real Dirichlet character mod L, stored as its full value table on
// residues 0..L-1.  Values are -1, 0 or +1 (0 exactly off the units);
// construction validates complete multiplicativity.
class DirichletCharacter {
  public:
    long modulus() const { return modulus_; }
    bool is_principal() const { return principal_; }
    // chi(a) for any integer a (reduced mod L).
    Rational operator()(long a) const;
    int value_at(long residue) const { return values_[static_cast<size_t>(residue)]; }
    const std::vector<int>& table() const { return values_; }

    // chi(-1); +1 for even characters, -1 for odd ones.
    int parity() const { return modulus_ == 1 ? 1 : values_[static_cast<size_t>(modulus_ - 1)]; }

    std::string describe() const; // e.g. "chi mod 4 [0,1,0,-1]"

    friend DirichletCharacter make_character(long modulus, const std::vector<int>& table,
                                             bool require_nonprincipal);

  private:
    DirichletCharacter(long modulus, std::vector<int> values, bool principal)
        : modulus_(modulus), values_(std::move(values)), principal_(principal) {}

    long modulus_ = 1;
    std::vector<int> values_;
    bool principal_ = true;
};

// Validates the table (support, realness, multiplicativity) and returns the
// character; ValidationError names the first violated invariant.  With
// require_nonprincipal set, principal tables are rejected as well.
DirichletCharacter make_character(long modulus, const std::vector<int>& table,
                                  bool require_nonprincipal = false);

// Real character attached to the quadratic symbol of discriminant d,
// defined mod |d|; validated like any table character.
DirichletCharacter make_character_quadratic(long discriminant, bool require_nonprincipal = false);

// Load {"modulus": L, "values": [...]} from a JSON file.
DirichletCharacter load_character_json(const std::string& path, bool require_nonprincipal = false);

// All real characters mod L found by brute-force search over +-1
// assignments on the units; excludes the principal character when asked.
std::vector<DirichletCharacter> enumerate_real_characters(long modulus,
                                                          bool include_principal = false);

// Kronecker symbol (d | n).
int kronecker_symbol(long d, long n);

// Exact generalized Bernoulli number B_{n,chi} via the finite form
// L^(n-1) * sum_{a=1}^{L} chi(a) B_n(a/L).
Rational generalized_bernoulli(unsigned long n, const DirichletCharacter& chi);

} // namespace zetalab
