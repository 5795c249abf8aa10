#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace zetalab {

// Exact arbitrary-precision rational, always in lowest terms with a
// positive denominator.  Thin value-semantic wrapper over GMP's mpq_t.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long num) { // NOLINT(google-explicit-constructor) - scalar literals are pervasive
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
    }
    Rational(long num, long den);
    explicit Rational(const std::string& text); // "p/q" or "p"

    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }

    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }
    Rational abs() const {
        Rational r;
        mpq_abs(r.q_, q_);
        return r;
    }

    // Largest integer <= *this, as a Rational.
    Rational floor() const;
    // Fractional part in [0, 1).
    Rational frac() const { return *this - floor(); }

    Rational pow_int(long e) const;

    double to_double() const { return mpq_get_d(q_); }
    // Exact conversion; requires an integer value that fits in a long.
    long to_long() const;
    // "p/q", or "p" when the denominator is 1.
    std::string str() const;

    mpq_srcptr raw() const { return q_; }
    mpq_ptr raw() { return q_; }

  private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// n! as a Rational.
Rational factorial_r(unsigned long n);
// Binomial coefficient C(n, k) as a Rational.
Rational binomial_r(unsigned long n, unsigned long k);

} // namespace zetalab
