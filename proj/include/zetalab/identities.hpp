#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetalab/bigcomplex.hpp"
#include "zetalab/precision.hpp"
#include "zetalab/rational.hpp"
#include "zetalab/report.hpp"

namespace zetalab {

// One entry per verifiable identity.  CotCothFalse is the deliberately
// wrong partial-fraction expansion whose measured discrepancy must equal
// (1/2) log(beta/alpha); every other entry is checked to tolerance.
enum class IdentityId {
    Ramanujan,           // two-parameter reflection producing zeta(2n+1)
    CotCothCorrected,    // cot*coth partial fractions, with the log term
    CotCothFalse,        // the uncorrected expansion (known false)
    ZetaNeg1,            // alpha,beta-weighted Lambert sums = (alpha+beta)/24 - 1/4
    EtaLog,              // log-eta type transformation of sum 1/(m(e^{2 m a}-1))
    CotCothPfd,          // pairwise-combined partial fraction expansion
    SitaPf,              // partial fractions with 1/(m(m^2 +- t^2)) weights
    SitaPfExp,           // same, exponential part split off explicitly
    Lerch,               // zeta(4n+3) = rational * pi^(4n+3) - fast sum
    CothReflection,      // coth-sum form of the reflection
    CothPi,              // sum coth(pi m)/m^(4n+3) in closed form
    STransform,          // z -> -1/z law for the Lambert sums, with g and h
    GeneralTransform,    // full (V, r1, r2) transformation law
    BernoulliReflection, // k^(2n-1) sums with exact rational right side
    Glaisher,            // sum k^(4n+1)/(e^(2 pi k)-1) = B_{4n+2}/(4(2n+1))
    Schlomilch,          // classical route to the ZetaNeg1 identity
    SchlomilchPi,        // its alpha = beta = pi specialization
};

struct ParamSpec {
    std::string name;
    std::string kind;   // "int", "real", "rational", "complex", "matrix"
    std::string domain; // human-readable constraint
};

struct IdentityInfo {
    IdentityId id;
    std::string name;    // stable CLI identifier
    std::string formula; // one-line ASCII rendering
    std::vector<ParamSpec> params;
};

const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo& identity_info(IdentityId id);
IdentityId identity_from_string(const std::string& name);

// Integer matrix (a b; c d) acting by z -> (az+b)/(cz+d).
struct Mat2 {
    long a = 0, b = -1, c = 1, d = 0; // defaults to S
    long det() const { return a * d - b * c; }
    bool is_s() const { return a == 0 && b == -1 && c == 1 && d == 0; }
};

// Parameter bag shared by all identity evaluators; each identity reads the
// fields its schema names.  When beta is absent but alpha is given, beta
// defaults to pi^2/alpha.
struct EisensteinParams {
    std::optional<BigReal> alpha, beta, w, x, y;
    std::optional<BigComplex> z;
    std::optional<long> n, m;
    std::optional<Rational> r1, r2;
    std::optional<Mat2> V;
};

enum class Side { left, right };

// Defaults that exercise each identity's schema.
EisensteinParams default_params(IdentityId id, const PrecisionContext& ctx);

// Evaluate one side with certified truncation below 10^-working.
BigComplex evaluate_side(IdentityId id, Side side, const EisensteinParams& params,
                         const PrecisionContext& ctx, long* terms_used = nullptr);

// Two-sided residual report.  Default tolerance is 10^-target.
VerificationReport verify(IdentityId id, const EisensteinParams& params,
                          const PrecisionContext& ctx,
                          std::optional<BigReal> tolerance = std::nullopt);

// A(z,-m,r1,r2) = sum_{n > -r1} sum_{k>=1} k^(-m-1) e^(2 pi i k((n+r1)z + r2)),
// both indices truncated with geometric certificates.
BigComplex transform_A(const BigComplex& z, long m, const Rational& r1, const Rational& r2,
                       const PrecisionContext& ctx, long* terms_used = nullptr);

// H = A(z,-m,r1,r2) + (-1)^m A(z,-m,-r1,-r2).
BigComplex transform_H(const BigComplex& z, long m, const Rational& r1, const Rational& r2,
                       const PrecisionContext& ctx, long* terms_used = nullptr);

// Exact coefficients of the Bernoulli correction term h: entry k holds the
// coefficient of (cz+d)^(k-1), k = 0..m+2; empty when m+2 < 0.
std::vector<Rational> h_correction_coefficients(long m, const Rational& r1, const Rational& r2,
                                                const Mat2& V);

BigComplex transform_h_poly(const BigComplex& z, long m, const Rational& r1, const Rational& r2,
                            const Mat2& V, const PrecisionContext& ctx);

// Residual of (cz+d)^m H(Vz) - H(z,R1,R2) - g - (2 pi i)^(m+1) h.
// Supported cases: r1 = r2 = 0 with V = S (closed-form g), or r1 and
// R1 = a r1 + c r2 both non-integers (g = 0); otherwise UnsupportedCase.
VerificationReport verify_thmH(const BigComplex& z, long m, const Rational& r1,
                               const Rational& r2, const Mat2& V, const PrecisionContext& ctx,
                               std::optional<BigReal> tolerance = std::nullopt);

// Minimum imaginary part accepted for series evaluation points.
inline Rational im_floor() { return Rational(1, 1000); }

} // namespace zetalab
