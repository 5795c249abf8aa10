#include "zetalab/series.hpp"

#include <algorithm>

#include "zetalab/bernoulli.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {

// Once (1 + 1/(M+1))^p r <= rho < 1, the tail is at most
// (M+1)^p r^(M+1) / (1 - rho).
BigReal power_geometric_tail(long p, const BigReal& r, long M, mpfr_prec_t bits) {
    BigReal one(1, bits);
    BigReal ratio = pow_int(one + BigReal(Rational(1, M + 1), bits), p) * r;
    if (ratio >= 1) return BigReal(-1, bits);
    BigReal first = pow_int(BigReal(M + 1, bits), p) * pow_int(r, M + 1);
    return first / (one - ratio);
}

BigReal exp_frac_sum(long s, const BigReal& a, const PrecisionContext& ctx, long* terms_used) {
    if (a.sign() <= 0) throw DomainError("exp_frac_sum: a must be positive");
    mpfr_prec_t bits = ctx.working_bits();
    BigReal eps = pow10(-(ctx.working_digits() + 2), bits);
    BigReal r = exp(BigReal(-2, bits) * a);
    long p = std::max(0l, -s);

    BigReal acc(0, bits);
    BigReal u(1, bits); // r^m, built up multiplicatively
    long m = 0;
    while (true) {
        if (++m > ctx.max_terms())
            throw PrecisionError("exp_frac_sum: max_terms=" + std::to_string(ctx.max_terms()) +
                                 " insufficient for the tail bound");
        u *= r;
        BigReal term = pow_int(BigReal(m, bits), -s) * (u / (1 - u));
        acc += term;
        // 1/(e^{2ma}-1) <= r^m/(1-r), so the remaining tail is controlled
        // by sum_{k>m} k^p r^k.
        BigReal bound = power_geometric_tail(p, r, m, bits);
        if (bound.sign() >= 0 && bound / (1 - r) < eps) break;
    }
    if (terms_used) *terms_used = m;
    return acc;
}

BigComplex lambert_point(long s, const BigComplex& z, const PrecisionContext& ctx,
                         long* terms_used) {
    if (!z.in_upper_half_plane()) throw DomainError("lambert_point: Im z must be positive");
    mpfr_prec_t bits = ctx.working_bits();
    BigReal eps = pow10(-(ctx.working_digits() + 2), bits);
    BigComplex q = q_from_z(z);
    BigReal qa = q.abs();
    if (qa >= 1) throw DomainError("lambert_point: |q| >= 1");
    long p = std::max(0l, -s);

    BigComplex acc(0, 0, bits);
    BigComplex qk(1, 0, bits);
    BigComplex one(1, 0, bits);
    long k = 0;
    while (true) {
        if (++k > ctx.max_terms())
            throw PrecisionError("lambert_point: max_terms=" + std::to_string(ctx.max_terms()) +
                                 " insufficient for the tail bound");
        qk *= q;
        BigComplex term = (qk / (one - qk)) * pow_int(BigReal(k, bits), -s);
        acc += term;
        BigReal bound = power_geometric_tail(p, qa, k, bits);
        if (bound.sign() >= 0 && bound / (1 - qa) < eps) break;
    }
    if (terms_used) *terms_used = k;
    return acc;
}

BigReal zeta_tail(long s, long M, const PrecisionContext& ctx) {
    if (s < 2) throw DomainError("zeta_tail: exponent must be >= 2");
    if (M < 1) throw DomainError("zeta_tail: split point must be >= 1");
    mpfr_prec_t bits = ctx.working_bits();
    BigReal eps = pow10(-(ctx.working_digits() + 2), bits);
    BigReal Mr(M, bits);

    // sum_{m>M} m^-s = M^(1-s)/(s-1) - M^-s/2
    //                + sum_{j>=1} B_{2j}/(2j)! * (s)_{2j-1} * M^(1-s-2j) + R,
    // |R| <= 4 * first omitted term (f completely monotone).
    BigReal acc = pow_int(Mr, 1 - s) / (s - 1) - pow_int(Mr, -s) / 2;
    BigReal poch(s, bits);                       // (s)_{2j-1}, running
    BigReal mpow = pow_int(Mr, -s - 1);          // M^(1-s-2j), running
    BigReal prev_abs(-1, bits);
    for (long j = 1;; ++j) {
        BigReal term = BigReal(bernoulli(2 * static_cast<unsigned long>(j)) /
                                   factorial_r(2 * static_cast<unsigned long>(j)),
                               bits) *
                       poch * mpow;
        BigReal t = abs(term);
        if (t * 4 < eps) break; // certified remainder below budget
        if (prev_abs.sign() > 0 && t > prev_abs)
            throw PrecisionError("zeta_tail: asymptotic terms grow before reaching the "
                                 "budget; increase the split point M=" +
                                 std::to_string(M));
        acc += term;
        prev_abs = t;
        poch *= BigReal(s + 2 * j - 1, bits) * BigReal(s + 2 * j, bits);
        mpow = mpow / (Mr * Mr);
        if (j > 1200)
            throw PrecisionError("zeta_tail: no convergence within 1200 correction terms");
    }
    return acc;
}

BigReal dirichlet_partial(long s, long N, mpfr_prec_t bits) {
    BigReal acc(0, bits);
    for (long m = 1; m <= N; ++m) acc += pow_int(BigReal(m, bits), -s);
    return acc;
}

long em_split_point(long s, const PrecisionContext& ctx) {
    // With M at the working digit count the correction terms bottom out
    // near j = 0.4 M, well before the asymptotic series turns.
    return std::max({32l, s + 2, static_cast<long>(ctx.working_digits())});
}

} // namespace zetalab
