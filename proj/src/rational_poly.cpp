#include "zetalab/rational_poly.hpp"

#include <algorithm>

#include "zetalab/errors.hpp"

namespace zetalab {

RationalPoly RationalPoly::monomial(const Rational& coeff, size_t degree) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = coeff;
    return RationalPoly(std::move(c));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.is_zero() || b.is_zero()) return RationalPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= s;
    return RationalPoly(std::move(c));
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

BigComplex RationalPoly::eval(const BigComplex& z) const {
    mpfr_prec_t bits = z.prec_bits();
    BigComplex acc(0, 0, bits);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + BigComplex(BigReal(c_[i], bits));
    return acc;
}

RationalPoly RationalPoly::divide_by_linear(const Rational& root) const {
    if (is_zero()) return RationalPoly();
    std::vector<Rational> q(c_.size() - 1, Rational(0));
    Rational carry(0);
    for (size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * root;
        q[i - 1] = carry;
    }
    Rational rem = c_[0] + carry * root;
    if (!rem.is_zero()) throw NotAPolynomial("divide_by_linear: nonzero remainder " + rem.str());
    return RationalPoly(std::move(q));
}

RationalPoly RationalPoly::divide_by_x() const {
    if (is_zero()) return RationalPoly();
    if (!c_[0].is_zero())
        throw NotAPolynomial("divide_by_x: nonzero constant term " + c_[0].str());
    return RationalPoly(std::vector<Rational>(c_.begin() + 1, c_.end()));
}

std::string RationalPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += c_[i].str();
        if (i == 1) s += " x";
        if (i > 1) s += " x^" + std::to_string(i);
    }
    return s;
}

} // namespace zetalab
