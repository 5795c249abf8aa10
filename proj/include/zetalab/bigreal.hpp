#pragma once

#include <mpfr.h>

#include <iosfwd>
#include <string>

#include "zetalab/precision.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

// Arbitrary-precision real backed by MPFR.  A value carries its own binary
// precision; binary operations compute at the larger of the two operand
// precisions, so precision flows from the leaf constants, which are always
// created at a context's working precision.  All roundings are to nearest.
class BigReal {
  public:
    BigReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigReal(long value, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    BigReal(const Rational& value, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, value.raw(), MPFR_RNDN);
    }
    static BigReal from_string(const std::string& text, mpfr_prec_t bits);

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }
    int precision_digits() const {
        return static_cast<int>(static_cast<double>(prec_bits()) * 0.30102999566398120);
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator+(long a, const BigReal& b) { return b + a; }
    friend BigReal operator*(long a, const BigReal& b) { return b * a; }
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator/(long a, const BigReal& b);

    BigReal operator-() const {
        BigReal r(prec_bits());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
    BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
    BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
    BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
    friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Scientific notation with the given number of significant digits;
    // deterministic for a fixed value and digit count.
    std::string str(int digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal expm1(const BigReal& x);
BigReal log(const BigReal& x); // requires x > 0
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal floor(const BigReal& x);
BigReal pow_int(const BigReal& x, long e);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);

// pi at the context's working precision.
BigReal const_pi(const PrecisionContext& ctx);
BigReal const_pi_bits(mpfr_prec_t bits);

// 10^-e at the given precision (positive e gives a small threshold).
BigReal pow10(long e, mpfr_prec_t bits);

// Real hyperbolic/circular cotangent with pole guards; a DomainError is
// raised within 10^-working of a pole.
BigReal cot(const BigReal& x, const PrecisionContext& ctx);
BigReal coth(const BigReal& x, const PrecisionContext& ctx);

} // namespace zetalab
