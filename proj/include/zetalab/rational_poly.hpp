#pragma once

#include <vector>

#include "zetalab/bigcomplex.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

// Polynomial with exact rational coefficients, index = degree.
// The zero polynomial is the empty coefficient list.
class RationalPoly {
  public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly monomial(const Rational& coeff, size_t degree);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    RationalPoly operator*(const Rational& s) const;
    RationalPoly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }

    Rational eval(const Rational& x) const;
    BigComplex eval(const BigComplex& z) const;

    // Exact division by (x - root); the remainder must vanish.
    RationalPoly divide_by_linear(const Rational& root) const;
    // Exact division by x; the constant term must vanish.
    RationalPoly divide_by_x() const;

    std::string str() const; // e.g. "1/12 + 1/12 x^2"

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

} // namespace zetalab
