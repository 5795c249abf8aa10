#pragma once

#include <string>

#include "zetalab/bigreal.hpp"

namespace zetalab {

// Complex number with BigReal parts.  Upper half-plane arguments (Im > 0)
// are the domain of all q-series work; in_upper_half_plane() is the check
// call sites use before evaluating.
class BigComplex {
  public:
    BigComplex() = default;
    BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
    BigComplex(long re, long im, mpfr_prec_t bits) : re_(re, bits), im_(im, bits) {}
    explicit BigComplex(const BigReal& re) : re_(re), im_(BigReal(0, re.prec_bits())) {}

    const BigReal& re() const { return re_; }
    const BigReal& im() const { return im_; }
    BigReal& re() { return re_; }
    BigReal& im() { return im_; }

    mpfr_prec_t prec_bits() const { return std::max(re_.prec_bits(), im_.prec_bits()); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);

    friend BigComplex operator+(const BigComplex& a, const BigReal& b) { return {a.re_ + b, a.im_}; }
    friend BigComplex operator-(const BigComplex& a, const BigReal& b) { return {a.re_ - b, a.im_}; }
    friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re_ * b, a.im_ * b}; }
    friend BigComplex operator/(const BigComplex& a, const BigReal& b) { return {a.re_ / b, a.im_ / b}; }
    friend BigComplex operator*(const BigReal& a, const BigComplex& b) { return b * a; }

    BigComplex operator-() const { return {-re_, -im_}; }

    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool in_upper_half_plane() const { return im_.sign() > 0; }

    BigComplex conj() const { return {re_, -im_}; }
    BigReal norm_sq() const { return re_ * re_ + im_ * im_; }
    BigReal abs() const { return zetalab::sqrt(norm_sq()); }

    std::string str(int digits) const;

  private:
    BigReal re_;
    BigReal im_;
};

BigReal abs(const BigComplex& z);

BigComplex exp(const BigComplex& z);
// Principal branch; DomainError within 10^-working of the branch point 0.
BigComplex log(const BigComplex& z, const PrecisionContext& ctx);
BigComplex pow_int(const BigComplex& z, long e);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex sinh(const BigComplex& z);
BigComplex cosh(const BigComplex& z);
BigComplex cot(const BigComplex& z, const PrecisionContext& ctx);
BigComplex coth(const BigComplex& z, const PrecisionContext& ctx);

// e^(2 pi i z), the modular variable q.
BigComplex q_from_z(const BigComplex& z);

// i at the given precision.
BigComplex imag_unit(mpfr_prec_t bits);

} // namespace zetalab
