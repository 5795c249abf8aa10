#pragma once

#include <optional>

#include "zetalab/bigreal.hpp"
#include "zetalab/precision.hpp"
#include "zetalab/rational.hpp"

namespace zetalab {

// zeta(2n) = rational_part * pi^(2n), exactly.
struct ZetaEvenValue {
    long n;
    Rational rational_part;
};

enum class ZetaMethod { ramanujan, oracle };

struct ZetaOddValue {
    long s;
    BigReal value;
    ZetaMethod method;
    int achieved_digits;
    // For s = 3 (mod 4): the exact rational C with
    // zeta(s) = C * pi^s - 2 * sum_{k>=1} k^(-s)/(e^(2 pi k) - 1).
    std::optional<Rational> pi_power_coefficient;
};

// Euler: zeta(2n) = (-1)^(n-1) B_{2n} 2^(2n-1)/(2n)! * pi^(2n).
ZetaEvenValue zeta_even(long n);
BigReal zeta_even_value(long n, const PrecisionContext& ctx);

// zeta(1-2n) = -B_{2n}/(2n), exactly.
Rational zeta_negative_odd(long n);

// Direct Dirichlet series with Euler-Maclaurin tail correction; the slow
// route, independent of every identity verified elsewhere.
ZetaOddValue zeta_odd_oracle(long s, const PrecisionContext& ctx);

// Fast route.  s = 3 (mod 4): rational multiple of pi^s minus a rapidly
// convergent exponential sum.  s = 1 (mod 4): the two-parameter reflection
// evaluated at (pi/2, 2 pi) and solved for zeta(s).
ZetaOddValue zeta_odd_fast(long s, const PrecisionContext& ctx);

// zeta at any integer j != 1: exact-backed values for j <= 0 and even j,
// odd-route for odd j >= 3 (oracle by default).
BigReal zeta_int(long j, const PrecisionContext& ctx, bool use_oracle_for_odd = true);

} // namespace zetalab
