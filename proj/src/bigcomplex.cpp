#include "zetalab/bigcomplex.hpp"

#include "zetalab/errors.hpp"

namespace zetalab {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal n = b.norm_sq();
    if (n.is_zero()) throw DomainError("BigComplex: division by zero");
    return {(a.re() * b.re() + a.im() * b.im()) / n, (a.im() * b.re() - a.re() * b.im()) / n};
}

std::string BigComplex::str(int digits) const {
    std::string s = re_.str(digits);
    s += (im_.sign() < 0) ? " - " : " + ";
    s += zetalab::abs(im_).str(digits);
    s += "i";
    return s;
}

BigReal abs(const BigComplex& z) { return z.abs(); }

BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.re());
    return {m * cos(z.im()), m * sin(z.im())};
}

BigComplex log(const BigComplex& z, const PrecisionContext& ctx) {
    BigReal r = z.abs();
    if (r < pow10(-ctx.working_digits(), z.prec_bits()))
        throw DomainError("log: argument within 10^-working of the branch point 0");
    return {log(r), atan2(z.im(), z.re())};
}

BigComplex pow_int(const BigComplex& z, long e) {
    mpfr_prec_t bits = z.prec_bits();
    if (e == 0) return BigComplex(1, 0, bits);
    BigComplex base = z;
    if (e < 0) base = BigComplex(1, 0, bits) / z;
    unsigned long n = (e > 0) ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    BigComplex acc(1, 0, bits);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

BigComplex sin(const BigComplex& z) {
    return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())};
}

BigComplex cos(const BigComplex& z) {
    return {cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))};
}

BigComplex sinh(const BigComplex& z) {
    return {sinh(z.re()) * cos(z.im()), cosh(z.re()) * sin(z.im())};
}

BigComplex cosh(const BigComplex& z) {
    return {cosh(z.re()) * cos(z.im()), sinh(z.re()) * sin(z.im())};
}

BigComplex cot(const BigComplex& z, const PrecisionContext& ctx) {
    // Poles at k*pi on the real axis.
    BigReal pi = const_pi_bits(z.prec_bits());
    BigReal k = floor(z.re() / pi + BigReal(Rational(1, 2), z.prec_bits()));
    BigComplex nearest(k * pi, BigReal(0, z.prec_bits()));
    if ((z - nearest).abs() < pow10(-ctx.working_digits(), z.prec_bits()))
        throw DomainError("cot: argument within 10^-working of a pole");
    return cos(z) / sin(z);
}

BigComplex coth(const BigComplex& z, const PrecisionContext& ctx) {
    // Poles at i*k*pi.
    BigReal pi = const_pi_bits(z.prec_bits());
    BigReal k = floor(z.im() / pi + BigReal(Rational(1, 2), z.prec_bits()));
    BigComplex nearest(BigReal(0, z.prec_bits()), k * pi);
    if ((z - nearest).abs() < pow10(-ctx.working_digits(), z.prec_bits()))
        throw DomainError("coth: argument within 10^-working of a pole");
    return cosh(z) / sinh(z);
}

BigComplex q_from_z(const BigComplex& z) {
    BigReal two_pi = const_pi_bits(z.prec_bits()) * 2;
    // exp(2 pi i (x + i y)) = e^{-2 pi y} (cos 2 pi x + i sin 2 pi x)
    BigReal m = exp(-(two_pi * z.im()));
    BigReal phase = two_pi * z.re();
    return {m * cos(phase), m * sin(phase)};
}

BigComplex imag_unit(mpfr_prec_t bits) { return BigComplex(0, 1, bits); }

} // namespace zetalab
