#include "zetalab/zeta.hpp"

#include "zetalab/bernoulli.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

ZetaEvenValue zeta_even(long n) {
    if (n < 1) throw DomainError("zeta_even: n must be >= 1");
    unsigned long un = static_cast<unsigned long>(n);
    Rational part = bernoulli(2 * un) * Rational(2).pow_int(2 * n - 1) / factorial_r(2 * un);
    if (n % 2 == 0) part = -part;
    return {n, part};
}

BigReal zeta_even_value(long n, const PrecisionContext& ctx) {
    BigReal pi = const_pi(ctx);
    return BigReal(zeta_even(n).rational_part, ctx.working_bits()) * pow_int(pi, 2 * n);
}

Rational zeta_negative_odd(long n) {
    if (n < 1) throw DomainError("zeta_negative_odd: n must be >= 1");
    unsigned long un = static_cast<unsigned long>(n);
    return -(bernoulli(2 * un) / Rational(2 * n));
}

ZetaOddValue zeta_odd_oracle(long s, const PrecisionContext& ctx) {
    if (s < 3 || s % 2 == 0) throw DomainError("zeta_odd_oracle: s must be odd and >= 3");
    long M = em_split_point(s, ctx);
    BigReal value = dirichlet_partial(s, M, ctx.working_bits()) + zeta_tail(s, M, ctx);
    return {s, value, ZetaMethod::oracle, ctx.target_digits(), std::nullopt};
}

ZetaOddValue zeta_odd_fast(long s, const PrecisionContext& ctx) {
    if (s < 3 || s % 2 == 0) throw DomainError("zeta_odd_fast: s must be odd and >= 3");
    long n = (s - 1) / 2;
    // The solve below multiplies by powers of pi up to pi^(s); add guard
    // digits so the final value still carries the full working accuracy.
    PrecisionContext wctx = ctx.with_extra_guard(static_cast<int>(n) + 16);
    mpfr_prec_t bits = wctx.working_bits();
    BigReal pi = const_pi(wctx);

    if (s % 4 == 3) {
        // zeta(4N+3) = C pi^(4N+3) - 2 sum_{k>=1} k^-(4N+3)/(e^(2 pi k)-1),
        // C = 2^(4N+2) sum_{k=0}^{2N+2} (-1)^(k+1) B_{2k}/(2k)! B_{4N+4-2k}/(4N+4-2k)!
        long N = (s - 3) / 4;
        Rational C(0);
        for (long k = 0; k <= 2 * N + 2; ++k) {
            unsigned long uk = static_cast<unsigned long>(k);
            unsigned long rest = static_cast<unsigned long>(4 * N + 4 - 2 * k);
            Rational term = bernoulli(2 * uk) / factorial_r(2 * uk) * bernoulli(rest) /
                            factorial_r(rest);
            C += (k % 2 == 0) ? -term : term;
        }
        C *= Rational(2).pow_int(4 * N + 2);
        BigReal value = BigReal(C, bits) * pow_int(pi, s) - 2 * exp_frac_sum(s, pi, wctx);
        return {s, value, ZetaMethod::ramanujan, ctx.target_digits(), C};
    }

    // s = 1 (mod 4): n is even, so the symmetric choice alpha = beta = pi
    // annihilates the zeta coefficient; use alpha = pi/2, beta = 2 pi and
    // solve the reflection for zeta(s).
    BigReal alpha = pi / 2;
    BigReal beta = pi * 2;
    BigReal s_alpha = exp_frac_sum(s, alpha, wctx);
    BigReal s_beta = exp_frac_sum(s, beta, wctx);
    BigReal rhs(0, bits);
    for (long k = 0; k <= n + 1; ++k) {
        unsigned long uk = static_cast<unsigned long>(k);
        unsigned long rest = static_cast<unsigned long>(2 * n + 2 - 2 * k);
        Rational coeff = bernoulli(2 * uk) / factorial_r(2 * uk) * bernoulli(rest) /
                         factorial_r(rest);
        BigReal term = BigReal(coeff, bits) * pow_int(alpha, n + 1 - k) * pow_int(beta, k);
        rhs += (k % 2 == 0) ? -term : term;
    }
    rhs *= pow_int(BigReal(2, bits), 2 * n);
    BigReal a_pow = pow_int(alpha, -n);
    BigReal b_pow = pow_int(beta, -n); // (-beta)^-n = beta^-n, n even
    BigReal solve_coeff = (a_pow - b_pow) / 2; // nonzero since n >= 2 here
    BigReal value = (rhs - a_pow * s_alpha + b_pow * s_beta) / solve_coeff;
    return {s, value, ZetaMethod::ramanujan, ctx.target_digits(), std::nullopt};
}

BigReal zeta_int(long j, const PrecisionContext& ctx, bool use_oracle_for_odd) {
    mpfr_prec_t bits = ctx.working_bits();
    if (j == 1) throw DomainError("zeta_int: pole at s = 1");
    if (j == 0) return BigReal(Rational(-1, 2), bits);
    if (j < 0) {
        if (j % 2 == 0) return BigReal(0, bits); // trivial zeros
        return BigReal(zeta_negative_odd((1 - j) / 2), bits);
    }
    if (j % 2 == 0) return zeta_even_value(j / 2, ctx);
    return use_oracle_for_odd ? zeta_odd_oracle(j, ctx).value : zeta_odd_fast(j, ctx).value;
}

} // namespace zetalab
