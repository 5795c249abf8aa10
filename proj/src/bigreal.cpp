#include "zetalab/bigreal.hpp"

#include <algorithm>
#include <ostream>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(a.prec_bits(), b.prec_bits());
}

} // namespace

BigReal BigReal::from_string(const std::string& text, mpfr_prec_t bits) {
    BigReal r(bits);
    if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw ValidationError("BigReal: cannot parse \"" + text + "\"");
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("BigReal: division by zero");
    BigReal r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.prec_bits());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.prec_bits());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.prec_bits());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
BigReal operator/(const BigReal& a, long b) {
    if (b == 0) throw DomainError("BigReal: division by zero");
    BigReal r(a.prec_bits());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}
BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.prec_bits());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}
BigReal operator/(long a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("BigReal: division by zero");
    BigReal r(b.prec_bits());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

std::string BigReal::str(int digits) const {
    if (digits < 2) digits = 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.str(20); }

#define ZETALAB_UNARY(name, mpfr_fn)                 \
    BigReal name(const BigReal& x) {                 \
        BigReal r(x.prec_bits());                    \
        mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);        \
        return r;                                    \
    }

ZETALAB_UNARY(abs, mpfr_abs)
ZETALAB_UNARY(exp, mpfr_exp)
ZETALAB_UNARY(expm1, mpfr_expm1)
ZETALAB_UNARY(sin, mpfr_sin)
ZETALAB_UNARY(cos, mpfr_cos)
ZETALAB_UNARY(sinh, mpfr_sinh)
ZETALAB_UNARY(cosh, mpfr_cosh)
ZETALAB_UNARY(atan, mpfr_atan)

#undef ZETALAB_UNARY

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw DomainError("sqrt: negative argument");
    BigReal r(x.prec_bits());
    mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw DomainError("log: argument must be positive");
    BigReal r(x.prec_bits());
    mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    BigReal r(std::max(y.prec_bits(), x.prec_bits()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal floor(const BigReal& x) {
    BigReal r(x.prec_bits());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

BigReal pow_int(const BigReal& x, long e) {
    if (e == 0) return BigReal(1, x.prec_bits());
    if (x.is_zero() && e < 0) throw DomainError("pow_int: 0 to a negative power");
    BigReal r(x.prec_bits());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigReal min(const BigReal& a, const BigReal& b) { return (a < b) ? a : b; }
BigReal max(const BigReal& a, const BigReal& b) { return (a > b) ? a : b; }

BigReal const_pi_bits(mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal const_pi(const PrecisionContext& ctx) { return const_pi_bits(ctx.working_bits()); }

BigReal pow10(long e, mpfr_prec_t bits) {
    BigReal r(bits);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) return 1 / r;
    return r;
}

BigReal cot(const BigReal& x, const PrecisionContext& ctx) {
    // Poles at k*pi; measure the distance to the nearest one.
    BigReal pi = const_pi_bits(x.prec_bits());
    BigReal k = floor(x / pi + BigReal(Rational(1, 2), x.prec_bits()));
    BigReal dist = abs(x - k * pi);
    if (dist < pow10(-ctx.working_digits(), x.prec_bits()))
        throw DomainError("cot: argument within 10^-working of a pole");
    BigReal r(x.prec_bits());
    mpfr_cot(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal coth(const BigReal& x, const PrecisionContext& ctx) {
    if (abs(x) < pow10(-ctx.working_digits(), x.prec_bits()))
        throw DomainError("coth: argument within 10^-working of the pole at 0");
    BigReal r(x.prec_bits());
    mpfr_coth(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

} // namespace zetalab
