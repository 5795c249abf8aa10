#pragma once

#include "zetalab/bigcomplex.hpp"
#include "zetalab/bigreal.hpp"
#include "zetalab/precision.hpp"

namespace zetalab {

// Certified series summation.  Every routine either returns a value whose
// truncation error is below 10^-(working+2) or throws PrecisionError.

// sum_{m>=1} m^(-s) / (e^(2 m a) - 1) for real a > 0; s may be negative
// (polynomial growth against the exponential decay).
BigReal exp_frac_sum(long s, const BigReal& a, const PrecisionContext& ctx,
                     long* terms_used = nullptr);

// sum_{k>=1} k^(-s) / (e^(-2 pi i k z) - 1) = sum_{k>=1} k^(-s) q^k/(1-q^k)
// with q = e^(2 pi i z), for z in the upper half-plane.
BigComplex lambert_point(long s, const BigComplex& z, const PrecisionContext& ctx,
                         long* terms_used = nullptr);

// sum_{m>M} m^(-s) for integer s >= 2, via Euler-Maclaurin with a
// first-omitted-term remainder certificate.
BigReal zeta_tail(long s, long M, const PrecisionContext& ctx);

// sum_{m=1}^{N} m^(-s) at the given precision.
BigReal dirichlet_partial(long s, long N, mpfr_prec_t bits);

// Bound for sum_{m>M} m^p r^m with 0 < r < 1, p >= 0; negative when the
// term-ratio certificate has not engaged yet (keep summing).
BigReal power_geometric_tail(long p, const BigReal& r, long M, mpfr_prec_t bits);

// Reasonable Euler-Maclaurin split point for the given exponent.
long em_split_point(long s, const PrecisionContext& ctx);

} // namespace zetalab
