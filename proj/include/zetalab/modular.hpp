#pragma once

#include <optional>
#include <vector>

#include "zetalab/bigcomplex.hpp"
#include "zetalab/precision.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/report.hpp"

namespace zetalab {

// Truncated q-expansion sum_{n=0}^{N} a(n) q^n with exact coefficients.
struct QSeries {
    std::vector<Rational> coeffs; // coeffs[n] multiplies q^n
    long truncation() const { return static_cast<long>(coeffs.size()) - 1; }

    // Apply D = q d/dq the given number of times: a(n) -> n^times a(n).
    QSeries apply_D(long times) const;
};

// Exact divisor power sum sigma_k(n) = sum_{d|n} d^k; k may be negative.
Rational sigma(long k, long n);

// q-expansion of F_a: coefficients sigma_{-a}(n), n = 1..N.
QSeries lambert_q_series(long a, long N);

// q-expansion of E_k = 1 + (2/zeta(1-k)) sum sigma_{k-1}(n) q^n.
QSeries eisenstein_q_series(long k, long N);

// F_a(z) = sum_{n>=1} n^-a / (e^(-2 pi i n z) - 1), certified Lambert sum.
BigComplex lambert_F(long a, const BigComplex& z, const PrecisionContext& ctx,
                     long* terms_used = nullptr);

// Same value through the q-expansion route (used as an independent check).
BigComplex lambert_F_qexp(long a, const BigComplex& z, const PrecisionContext& ctx,
                          long* terms_used = nullptr);

// Normalized Eisenstein series E_k(z), even k >= 2.
BigComplex eisenstein_E(long k, const BigComplex& z, const PrecisionContext& ctx,
                        long* terms_used = nullptr);

// Residual of E_k(z) = z^-k E_k(-1/z), even k >= 4.
VerificationReport check_modularity(long k, const BigComplex& z, const PrecisionContext& ctx,
                                    std::optional<BigReal> tolerance = std::nullopt);

// Residual of E_2(z) = z^-2 E_2(-1/z) - 6/(pi i z).
VerificationReport check_quasimodular_E2(const BigComplex& z, const PrecisionContext& ctx,
                                         std::optional<BigReal> tolerance = std::nullopt);

// Eichler integral G_{2m+1}(z) = zeta(-1-2m)/2 (2 pi i z)^{2m+1}/(2m+1)! + F_{2m+1}(z).
BigComplex eichler_G(long m, const BigComplex& z, const PrecisionContext& ctx,
                     long* terms_used = nullptr);

// The degree-2m period polynomial p_m evaluated at z:
// zeta(2m+1)/2 (1 - z^{2m})
//   - (2 pi i)^{2m+1}/2 sum_{n=1}^{m} B_{2n} B_{2m-2n+2} z^{2n-1}/((2n)!(2m-2n+2)!).
BigComplex period_polynomial_value(long m, const BigComplex& z, const PrecisionContext& ctx);

// Residual of z^{2m} G(-1/z) - G(z) against period_polynomial_value.
VerificationReport check_period_relation(long m, const BigComplex& z,
                                         const PrecisionContext& ctx,
                                         std::optional<BigReal> tolerance = std::nullopt);

// Coefficient of z^j written as zeta_mult * zeta(k-1) + twopii_mult * (2 pi i)^(k-1).
struct PeriodCoeff {
    Rational zeta_mult;
    Rational twopii_mult;
};

// Exact coefficients of -sum_{j=0}^{k-2} (2 pi i)^j zeta(k-1-j) zeta(-j) z^j / j!,
// the critical-L-value polynomial of the weight-k Eisenstein series.  The
// j = k-2 coefficient carries the continued value of the L-series at its
// zeta(1)*zeta(2-k) point, which is -zeta(k-1)/2.
std::vector<PeriodCoeff> razar_weil_exact(long k);

// Exact coefficients of the period polynomial p_m, k = 2m+2 (same basis).
std::vector<PeriodCoeff> period_polynomial_exact(long k);

BigComplex razar_weil_rhs(long k, const BigComplex& z, const PrecisionContext& ctx);

// Recover zeta(2m+1) from the Eichler integral difference at a nonreal
// unimodular root alpha of the degree-(2m+2) Bernoulli polynomial:
// zeta(2m+1)/2 = (F(alpha) - alpha^{2m} F(-1/alpha)) / (alpha^{2m} - 1).
// NoSuchRoot when no nonreal root exists (m = 1); IllConditioned when every
// nonreal root has |alpha^{2m} - 1| < 10^-3 (all are 2m-th roots of unity,
// which is the case for m = 2 and m = 3).
BigReal zeta_from_eichler(long m, const PrecisionContext& ctx);

} // namespace zetalab
