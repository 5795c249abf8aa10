#include "zetalab/modular.hpp"

#include "zetalab/bernoulli.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/polyroots.hpp"
#include "zetalab/series.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

void require_h(const BigComplex& z, const PrecisionContext& ctx, const char* who) {
    BigReal dmin(im_floor(), ctx.working_bits());
    if (!(z.im() >= dmin))
        throw DomainError(std::string(who) + ": Im z must be >= 10^-3");
}

BigComplex minus_inv(const BigComplex& z, mpfr_prec_t bits) {
    return -(BigComplex(1, 0, bits) / z);
}

} // namespace

QSeries QSeries::apply_D(long times) const {
    QSeries out;
    out.coeffs.reserve(coeffs.size());
    for (size_t n = 0; n < coeffs.size(); ++n)
        out.coeffs.push_back(coeffs[n] * Rational(static_cast<long>(n)).pow_int(times));
    return out;
}

Rational sigma(long k, long n) {
    if (n < 1) throw DomainError("sigma: n must be >= 1");
    Rational acc(0);
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        acc += Rational(d).pow_int(k);
        long e = n / d;
        if (e != d) acc += Rational(e).pow_int(k);
    }
    return acc;
}

QSeries lambert_q_series(long a, long N) {
    QSeries s;
    s.coeffs.assign(static_cast<size_t>(N) + 1, Rational(0));
    for (long n = 1; n <= N; ++n) s.coeffs[static_cast<size_t>(n)] = sigma(-a, n);
    return s;
}

QSeries eisenstein_q_series(long k, long N) {
    if (k < 2 || k % 2 != 0) throw DomainError("eisenstein_q_series: k must be even and >= 2");
    Rational scale = Rational(2) / zeta_negative_odd(k / 2); // 2/zeta(1-k)
    QSeries s;
    s.coeffs.assign(static_cast<size_t>(N) + 1, Rational(0));
    s.coeffs[0] = Rational(1);
    for (long n = 1; n <= N; ++n) s.coeffs[static_cast<size_t>(n)] = scale * sigma(k - 1, n);
    return s;
}

BigComplex lambert_F(long a, const BigComplex& z, const PrecisionContext& ctx,
                     long* terms_used) {
    require_h(z, ctx, "lambert_F");
    return lambert_point(a, z, ctx, terms_used);
}

BigComplex lambert_F_qexp(long a, const BigComplex& z, const PrecisionContext& ctx,
                          long* terms_used) {
    require_h(z, ctx, "lambert_F_qexp");
    mpfr_prec_t bits = ctx.working_bits();
    BigReal eps = pow10(-(ctx.working_digits() + 2), bits);
    BigComplex q = q_from_z(z);
    BigReal qa = q.abs();
    // |sigma_{-a}(n)| <= d(n) <= n for a >= 0, and <= n * n^{-a} * ... for
    // a < 0 use sigma_{-a}(n) <= n^{1-a}; p covers both.
    long p = (a >= 0) ? 1 : 1 - a;
    BigComplex acc(0, 0, bits);
    BigComplex qn(1, 0, bits);
    long n = 0;
    while (true) {
        if (++n > ctx.max_terms()) throw PrecisionError("lambert_F_qexp: max_terms exhausted");
        qn *= q;
        acc += BigReal(sigma(-a, n), bits) * qn;
        BigReal bound = power_geometric_tail(p, qa, n, bits);
        if (bound.sign() >= 0 && bound < eps) break;
    }
    if (terms_used) *terms_used += n;
    return acc;
}

BigComplex eisenstein_E(long k, const BigComplex& z, const PrecisionContext& ctx,
                        long* terms_used) {
    if (k < 2 || k % 2 != 0) throw DomainError("eisenstein_E: k must be even and >= 2");
    require_h(z, ctx, "eisenstein_E");
    mpfr_prec_t bits = ctx.working_bits();
    BigReal eps = pow10(-(ctx.working_digits() + 2), bits);
    BigComplex q = q_from_z(z);
    BigReal qa = q.abs();
    BigReal scale(Rational(2) / zeta_negative_odd(k / 2), bits);
    // sigma_{k-1}(n) <= n^k
    BigComplex acc(1, 0, bits);
    BigComplex qn(1, 0, bits);
    long n = 0;
    while (true) {
        if (++n > ctx.max_terms()) throw PrecisionError("eisenstein_E: max_terms exhausted");
        qn *= q;
        acc += scale * BigReal(sigma(k - 1, n), bits) * qn;
        BigReal bound = power_geometric_tail(k, qa, n, bits);
        if (bound.sign() >= 0 && abs(scale) * bound < eps) break;
    }
    if (terms_used) *terms_used += n;
    return acc;
}

VerificationReport check_modularity(long k, const BigComplex& z, const PrecisionContext& ctx,
                                    std::optional<BigReal> tolerance) {
    if (k < 4) throw DomainError("check_modularity: k must be >= 4 (E_2 is quasimodular)");
    mpfr_prec_t bits = ctx.working_bits();
    long terms = 0;
    BigComplex w = minus_inv(z, bits);
    BigComplex lhs = eisenstein_E(k, z, ctx, &terms);
    BigComplex rhs = pow_int(z, -k) * eisenstein_E(k, w, ctx, &terms);
    VerificationReport rep;
    rep.id = "eisenstein_modularity";
    rep.params = {{"k", std::to_string(k)}, {"z", z.str(12)}};
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_residual = (lhs - rhs).abs();
    rep.tolerance = tolerance ? *tolerance : pow10(-ctx.target_digits(), bits);
    rep.passed = rep.abs_residual < rep.tolerance;
    rep.terms_used = terms;
    return rep;
}

VerificationReport check_quasimodular_E2(const BigComplex& z, const PrecisionContext& ctx,
                                         std::optional<BigReal> tolerance) {
    mpfr_prec_t bits = ctx.working_bits();
    long terms = 0;
    BigComplex w = minus_inv(z, bits);
    BigComplex lhs = eisenstein_E(2, z, ctx, &terms);
    BigComplex pi_i_z = BigComplex(BigReal(0, bits), const_pi(ctx)) * z;
    BigComplex rhs = pow_int(z, -2) * eisenstein_E(2, w, ctx, &terms) -
                     BigComplex(6, 0, bits) / pi_i_z;
    VerificationReport rep;
    rep.id = "eisenstein_quasimodular_E2";
    rep.params = {{"z", z.str(12)}};
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_residual = (lhs - rhs).abs();
    rep.tolerance = tolerance ? *tolerance : pow10(-ctx.target_digits(), bits);
    rep.passed = rep.abs_residual < rep.tolerance;
    rep.terms_used = terms;
    return rep;
}

BigComplex eichler_G(long m, const BigComplex& z, const PrecisionContext& ctx,
                     long* terms_used) {
    if (m < 1) throw DomainError("eichler_G: m must be >= 1");
    require_h(z, ctx, "eichler_G");
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex two_pi_i_z = BigComplex(BigReal(0, bits), const_pi(ctx) * 2) * z;
    Rational head = zeta_negative_odd(m + 1) / 2 /
                    factorial_r(static_cast<unsigned long>(2 * m + 1));
    return BigReal(head, bits) * pow_int(two_pi_i_z, 2 * m + 1) +
           lambert_F(2 * m + 1, z, ctx, terms_used);
}

BigComplex period_polynomial_value(long m, const BigComplex& z, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.working_bits();
    BigReal zeta = zeta_odd_fast(2 * m + 1, ctx).value;
    BigComplex one(1, 0, bits);
    BigComplex acc = BigComplex(zeta / 2) * (one - pow_int(z, 2 * m));
    BigComplex two_pi_i(BigReal(0, bits), const_pi(ctx) * 2);
    BigComplex factor = pow_int(two_pi_i, 2 * m + 1) * BigReal(Rational(1, 2), bits);
    for (long n = 1; n <= m; ++n) {
        Rational c = bernoulli(static_cast<unsigned long>(2 * n)) /
                     factorial_r(static_cast<unsigned long>(2 * n)) *
                     bernoulli(static_cast<unsigned long>(2 * m - 2 * n + 2)) /
                     factorial_r(static_cast<unsigned long>(2 * m - 2 * n + 2));
        acc -= factor * BigReal(c, bits) * pow_int(z, 2 * n - 1);
    }
    return acc;
}

VerificationReport check_period_relation(long m, const BigComplex& z,
                                         const PrecisionContext& ctx,
                                         std::optional<BigReal> tolerance) {
    if (m < 1) throw DomainError("check_period_relation: m must be >= 1");
    mpfr_prec_t bits = ctx.working_bits();
    long terms = 0;
    BigComplex w = minus_inv(z, bits);
    BigComplex lhs = pow_int(z, 2 * m) * eichler_G(m, w, ctx, &terms) -
                     eichler_G(m, z, ctx, &terms);
    BigComplex rhs = period_polynomial_value(m, z, ctx);
    VerificationReport rep;
    rep.id = "period_relation";
    rep.params = {{"m", std::to_string(m)}, {"z", z.str(12)}};
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_residual = (lhs - rhs).abs();
    rep.tolerance = tolerance ? *tolerance : pow10(-ctx.target_digits(), bits);
    rep.passed = rep.abs_residual < rep.tolerance;
    rep.terms_used = terms;
    return rep;
}

std::vector<PeriodCoeff> razar_weil_exact(long k) {
    if (k < 4 || k % 2 != 0) throw DomainError("razar_weil_exact: k must be even and >= 4");
    std::vector<PeriodCoeff> coeffs(static_cast<size_t>(k - 1), PeriodCoeff{Rational(0), Rational(0)});
    // j = 0: -zeta(k-1) zeta(0) = zeta(k-1)/2.
    coeffs[0].zeta_mult = Rational(1, 2);
    // j = k-2: zeta(k-1-j) hits the pole at 1 while zeta(-j) hits a trivial
    // zero; the continued product is zeta'(2-k), and the polynomial
    // coefficient it produces is -zeta(k-1)/2.
    coeffs[static_cast<size_t>(k - 2)].zeta_mult = Rational(-1, 2);
    // odd j: -(2 pi i)^j zeta(k-1-j) zeta(-j) / j!, with zeta(k-1-j) an
    // even value E pi^(k-1-j); in the (2 pi i)^(k-1) basis this becomes
    // -E (-1)^((k-1-j)/2) 2^(j+1-k) zeta(-j) / j!.
    for (long j = 1; j <= k - 3; j += 2) {
        Rational even_part = zeta_even((k - 1 - j) / 2).rational_part;
        Rational neg_odd = zeta_negative_odd((j + 1) / 2);
        Rational r = even_part * neg_odd / factorial_r(static_cast<unsigned long>(j)) *
                     Rational(2).pow_int(j + 1 - k);
        if (((k - 1 - j) / 2) % 2 == 1) r = -r;
        coeffs[static_cast<size_t>(j)].twopii_mult = -r;
    }
    return coeffs;
}

std::vector<PeriodCoeff> period_polynomial_exact(long k) {
    if (k < 4 || k % 2 != 0)
        throw DomainError("period_polynomial_exact: k must be even and >= 4");
    long m = (k - 2) / 2;
    std::vector<PeriodCoeff> coeffs(static_cast<size_t>(k - 1), PeriodCoeff{Rational(0), Rational(0)});
    coeffs[0].zeta_mult = Rational(1, 2);
    coeffs[static_cast<size_t>(2 * m)].zeta_mult = Rational(-1, 2);
    for (long n = 1; n <= m; ++n) {
        Rational c = bernoulli(static_cast<unsigned long>(2 * n)) /
                     factorial_r(static_cast<unsigned long>(2 * n)) *
                     bernoulli(static_cast<unsigned long>(2 * m - 2 * n + 2)) /
                     factorial_r(static_cast<unsigned long>(2 * m - 2 * n + 2));
        coeffs[static_cast<size_t>(2 * n - 1)].twopii_mult = -(c / 2);
    }
    return coeffs;
}

BigComplex razar_weil_rhs(long k, const BigComplex& z, const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.working_bits();
    BigReal zeta_k1 = zeta_odd_fast(k - 1, ctx).value;
    BigComplex two_pi_i_pow = pow_int(BigComplex(BigReal(0, bits), const_pi(ctx) * 2), k - 1);
    std::vector<PeriodCoeff> coeffs = razar_weil_exact(k);
    BigComplex acc(0, 0, bits);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].zeta_mult.is_zero() && coeffs[j].twopii_mult.is_zero()) continue;
        BigComplex cj = BigComplex(BigReal(coeffs[j].zeta_mult, bits) * zeta_k1) +
                        two_pi_i_pow * BigReal(coeffs[j].twopii_mult, bits);
        acc += cj * pow_int(z, static_cast<long>(j));
    }
    return acc;
}

BigReal zeta_from_eichler(long m, const PrecisionContext& ctx) {
    if (m < 1) throw DomainError("zeta_from_eichler: m must be >= 1");
    mpfr_prec_t bits = ctx.working_bits();
    ComplexPoly poly = ComplexPoly::from_rational(ramanujan_poly(m), 2 * bits);
    std::vector<RootCertificate> roots = find_roots(poly, ctx);

    BigReal guard = pow10(-3, bits);
    BigReal best_gap(-1, bits);
    std::optional<BigComplex> best;
    bool any_nonreal = false;
    for (const auto& cert : roots) {
        if (cert.is_real) continue;
        if (!(cert.root.im().sign() > 0)) continue; // use the upper-half-plane member
        any_nonreal = true;
        // project onto the unit circle, where the identity lives
        BigComplex alpha = cert.root / cert.root.abs();
        BigReal gap = (pow_int(alpha, 2 * m) - BigComplex(1, 0, bits)).abs();
        if (gap > best_gap) {
            best_gap = gap;
            best = alpha;
        }
    }
    if (!any_nonreal)
        throw NoSuchRoot("zeta_from_eichler: no nonreal roots at m=" + std::to_string(m));
    if (!best || best_gap < guard)
        throw IllConditioned("zeta_from_eichler: every nonreal root has |alpha^(2m) - 1| < "
                             "10^-3 at m=" + std::to_string(m) +
                             " (the nonreal roots are 2m-th roots of unity)");

    BigComplex alpha = *best;
    BigComplex alpha_pow = pow_int(alpha, 2 * m);
    BigComplex f1 = lambert_F(2 * m + 1, alpha, ctx);
    BigComplex f2 = lambert_F(2 * m + 1, minus_inv(alpha, bits), ctx);
    BigComplex value = (f1 - alpha_pow * f2) / (alpha_pow - BigComplex(1, 0, bits)) *
                       BigReal(2, bits);
    return value.re();
}

} // namespace zetalab
