#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "zetalab/bernoulli.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/identities.hpp"
#include "zetalab/series.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

namespace {

EisensteinParams ab_params(const BigReal& alpha, const PrecisionContext& ctx,
                           std::optional<long> n = std::nullopt) {
    EisensteinParams p;
    p.alpha = alpha;
    p.beta = const_pi(ctx) * const_pi(ctx) / alpha;
    if (n) p.n = *n;
    return p;
}

} // namespace

TEST_CASE("registry is complete and self-consistent") {
    const auto& reg = identity_registry();
    CHECK(reg.size() == 17);
    std::set<std::string> names;
    for (const auto& info : reg) {
        CHECK(names.insert(info.name).second); // unique
        CHECK(identity_from_string(info.name) == info.id);
        CHECK(!info.formula.empty());
    }
    CHECK_THROWS_AS((void)identity_from_string("nope"), ValidationError);
}

TEST_CASE("reflection identity on a small grid") {
    PrecisionContext ctx(45);
    BigReal pi = const_pi(ctx);
    for (long n : {1l, 2l}) {
        for (const BigReal& alpha : {pi / 2, pi, BigReal(3, ctx.working_bits())}) {
            auto rep = verify(IdentityId::Ramanujan, ab_params(alpha, ctx, n), ctx);
            CHECK(rep.passed);
        }
    }
    // alpha = beta = pi with odd n degenerates symmetrically: both sides equal
    EisensteinParams p = ab_params(pi, ctx, 1);
    BigComplex l = evaluate_side(IdentityId::Ramanujan, Side::left, p, ctx);
    BigComplex r = evaluate_side(IdentityId::Ramanujan, Side::right, p, ctx);
    CHECK((l - r).abs() < pow10(-45, ctx.working_bits()));
    CHECK(!l.is_zero());
}

TEST_CASE("exact rational right sides hold across the parameter grid") {
    PrecisionContext ctx(45);
    BigReal pi = const_pi(ctx);
    std::vector<BigReal> alphas = {pi / 2, pi / 4, BigReal(1, ctx.working_bits())};

    for (auto id : {IdentityId::ZetaNeg1, IdentityId::Schlomilch, IdentityId::EtaLog})
        for (const BigReal& a : alphas) CHECK(verify(id, ab_params(a, ctx), ctx).passed);

    for (long n : {2l, 3l})
        for (const BigReal& a : alphas)
            CHECK(verify(IdentityId::BernoulliReflection, ab_params(a, ctx, n), ctx).passed);

    for (long n : {1l, 2l}) {
        EisensteinParams p;
        p.n = n;
        CHECK(verify(IdentityId::Glaisher, p, ctx).passed);
        CHECK(verify(IdentityId::Lerch, p, ctx).passed);
        CHECK(verify(IdentityId::CothPi, p, ctx).passed);
    }
    CHECK(verify(IdentityId::SchlomilchPi, EisensteinParams{}, ctx).passed);
    // glaisher n=1: the right side is exactly B_6/12 = 1/504
    CHECK(bernoulli(6) / Rational(12) == Rational(1, 504));
}

TEST_CASE("symmetric weight reflection reduces to the pi special case") {
    // alpha = beta = pi with odd n collapses the k^(2n-1) identity onto the
    // single exponential sum with its exact rational value
    PrecisionContext ctx(45);
    EisensteinParams p = ab_params(const_pi(ctx), ctx, 3);
    auto rep = verify(IdentityId::BernoulliReflection, p, ctx);
    CHECK(rep.passed);
    BigReal pi3 = pow_int(const_pi(ctx), 3);
    BigReal sum = rep.lhs.re() / (2 * pi3); // = sum_k k^5/(e^{2 pi k}-1)
    CHECK(abs(sum - BigReal(Rational(1, 504), ctx.working_bits())) <
          pow10(-44, ctx.working_bits()));
}

TEST_CASE("coth reflection form") {
    PrecisionContext ctx(40);
    BigReal pi = const_pi(ctx);
    for (long n : {1l, 2l, 3l})
        CHECK(verify(IdentityId::CothReflection, ab_params(pi, ctx, n), ctx).passed);
    CHECK(verify(IdentityId::CothReflection, ab_params(pi / 2, ctx, 2), ctx).passed);
}

TEST_CASE("corrected and false cot*coth expansions") {
    PrecisionContext ctx(45);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal pi = const_pi(ctx);
    for (const Rational& wq : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
        EisensteinParams p;
        p.alpha = BigReal(1, bits);
        p.beta = pi * pi;
        p.w = BigReal(wq, bits);
        auto good = verify(IdentityId::CotCothCorrected, p, ctx);
        CHECK(good.passed);
        auto bad = verify(IdentityId::CotCothFalse, p, ctx);
        CHECK(bad.passed); // confirmed false with the predicted gap
        // the raw discrepancy is (1/2) log(beta/alpha) = log(pi), not zero
        CHECK(abs(bad.abs_residual - log(pi)) < pow10(-40, bits));
    }
}

TEST_CASE("pole guards fire near the singular grid") {
    PrecisionContext ctx(30);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal pi = const_pi(ctx);
    EisensteinParams p;
    p.alpha = BigReal(1, bits);
    p.beta = pi * pi;
    p.w = pi * pi; // exactly the m = 1 pole
    CHECK_THROWS_AS((void)verify(IdentityId::CotCothCorrected, p, ctx), PoleError);

    EisensteinParams q;
    q.x = BigReal(2, bits); // integer x: pole of cot(pi x)
    q.y = BigReal(Rational(1, 3), bits);
    CHECK_THROWS_AS((void)verify(IdentityId::SitaPf, q, ctx), PoleError);
}

TEST_CASE("partial fraction forms") {
    PrecisionContext ctx(45);
    mpfr_prec_t bits = ctx.working_bits();
    for (auto [xq, yq] : {std::pair{Rational(1, 2), Rational(1, 3)},
                          std::pair{Rational(1, 3), Rational(1, 2)},
                          std::pair{Rational(5, 4), Rational(2, 3)}}) {
        EisensteinParams p;
        p.x = BigReal(xq, bits);
        p.y = BigReal(yq, bits);
        CHECK(verify(IdentityId::SitaPf, p, ctx).passed);
        CHECK(verify(IdentityId::SitaPfExp, p, ctx).passed);
        auto pfd = verify(IdentityId::CotCothPfd, p, ctx);
        CHECK(pfd.passed); // holds up to the predicted 2 pi x y log(y/x) gap
        if (xq == yq) CHECK(pfd.abs_residual < pow10(-40, bits));
    }
}

TEST_CASE("paired partial sums converge at the 1/N^2 rate") {
    // the two halves diverge like the harmonic series; the paired sum's
    // window |S_2N - S_N| must shrink by about 4x per doubling
    double x = 0.5, y = 1.0 / 3.0, pi = std::acos(-1.0);
    auto partial = [&](long N) {
        double s = 0;
        for (long n = 1; n <= N; ++n)
            s += n / std::tanh(pi * n * x / y) / (n * n + y * y) -
                 n / std::tanh(pi * n * y / x) / (n * n - x * x);
        return s;
    };
    double d1 = std::fabs(partial(200) - partial(100));
    double d2 = std::fabs(partial(400) - partial(200));
    double d3 = std::fabs(partial(800) - partial(400));
    CHECK(d1 / d2 > 3.0);
    CHECK(d1 / d2 < 5.0);
    CHECK(d2 / d3 > 3.0);
    CHECK(d2 / d3 < 5.0);
}

TEST_CASE("w-expansion coefficient matches the n=1 reflection") {
    // extract the w^1 coefficient of (pi/2)cot(sqrt(w a))coth(sqrt(w b)) - 1/(2w)
    // by divided differences and compare with the series route
    PrecisionContext ctx(60);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal pi = const_pi(ctx);
    BigReal alpha(1, bits);
    BigReal beta = pi * pi;

    auto g = [&](const BigReal& w) {
        return pi / 2 * cot(sqrt(w * alpha), ctx) * coth(sqrt(w * beta), ctx) - 1 / (2 * w);
    };
    // fit c_0..c_4 on the nodes h/2^j and read off c_1
    const int nodes = 5;
    BigReal h = pow10(-6, bits);
    std::vector<BigReal> ws, gs;
    for (int j = 0; j < nodes; ++j) {
        BigReal w = h / pow_int(BigReal(2, bits), j);
        ws.push_back(w);
        gs.push_back(g(w));
    }
    // Vandermonde solve by Gaussian elimination
    std::vector<std::vector<BigReal>> a(nodes, std::vector<BigReal>(nodes + 1, BigReal(0, bits)));
    for (int i = 0; i < nodes; ++i) {
        for (int j = 0; j < nodes; ++j) a[i][j] = pow_int(ws[i], j);
        a[i][nodes] = gs[i];
    }
    for (int col = 0; col < nodes; ++col) {
        int pivot = col;
        for (int r = col + 1; r < nodes; ++r)
            if (abs(a[r][col]) > abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        for (int r = 0; r < nodes; ++r) {
            if (r == col) continue;
            BigReal f = a[r][col] / a[col][col];
            for (int cc = col; cc <= nodes; ++cc) a[r][cc] -= f * a[col][cc];
        }
    }
    BigReal c1 = a[1][nodes] / a[1][1];

    // series route: c_1 = -(1/a)(zeta(3) + 2 S(a)) - (1/b)(zeta(3) + 2 S(b)),
    // which the n=1 reflection equates with -2x its Bernoulli side
    BigReal zeta3 = zeta_odd_oracle(3, ctx).value;
    BigReal series = -(zeta3 + 2 * exp_frac_sum(3, alpha, ctx)) / alpha -
                     (zeta3 + 2 * exp_frac_sum(3, beta, ctx)) / beta;
    CHECK(abs(c1 - series) < pow10(-10, bits));

    EisensteinParams p = ab_params(alpha, ctx, 1);
    BigComplex bern = evaluate_side(IdentityId::Ramanujan, Side::right, p, ctx);
    CHECK(abs(series + 2 * bern.re()) < pow10(-40, bits));
}

TEST_CASE("double sum A agrees with its Lambert collapse at r1 = r2 = 0") {
    PrecisionContext ctx(40);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(0, 1, bits);
    BigComplex a = transform_A(z, 2, Rational(0), Rational(0), ctx);
    BigComplex lam = lambert_point(3, z, ctx);
    CHECK((a - lam).abs() < pow10(-40, bits));
    // and equals the real exponential-fraction sum at z = i
    BigReal direct = exp_frac_sum(3, const_pi(ctx), ctx);
    CHECK(abs(a.re() - direct) < pow10(-40, bits));
    CHECK(abs(a.im()) < pow10(-40, bits));
}

TEST_CASE("double sum A against a brute-force double loop") {
    PrecisionContext ctx(30);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(0, 2, bits);
    Rational r1(1, 3), r2(1, 7);
    BigComplex fast = transform_A(z, 2, r1, r2, ctx);
    BigComplex brute(0, 0, bits);
    for (long n = 0; n <= 40; ++n) {
        for (long k = 1; k <= 40; ++k) {
            BigComplex arg = z * BigReal(Rational(n) + r1, bits) +
                             BigComplex(BigReal(r2, bits), BigReal(0, bits));
            // e^{2 pi i k arg}
            brute += pow_int(q_from_z(arg), k) * pow_int(BigReal(k, bits), -3);
        }
    }
    CHECK((fast - brute).abs() < pow10(-30, bits));
}

TEST_CASE("shifting r1 by one reindexes the same sum") {
    PrecisionContext ctx(35);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(BigReal(Rational(1, 4), bits), BigReal(1, bits));
    BigComplex a1 = transform_A(z, 3, Rational(1, 3), Rational(1, 5), ctx);
    BigComplex a2 = transform_A(z, 3, Rational(4, 3), Rational(1, 5), ctx);
    CHECK((a1 - a2).abs() < pow10(-35, bits));
}

TEST_CASE("H vanishes for odd m at r1 = r2 = 0 and doubles for even m") {
    PrecisionContext ctx(35);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(0, 1, bits);
    CHECK(transform_H(z, 3, Rational(0), Rational(0), ctx).abs() < pow10(-35, bits));
    BigComplex h2 = transform_H(z, 2, Rational(0), Rational(0), ctx);
    BigComplex lam = lambert_point(3, z, ctx);
    CHECK((h2 - lam * BigReal(2, bits)).abs() < pow10(-35, bits));
    // brute-force H at shifted arguments
    BigComplex hb = transform_H(BigComplex(0, 2, bits), 2, Rational(1, 3), Rational(1, 7), ctx);
    BigComplex direct = transform_A(BigComplex(0, 2, bits), 2, Rational(1, 3), Rational(1, 7), ctx) +
                        transform_A(BigComplex(0, 2, bits), 2, Rational(-1, 3), Rational(-1, 7), ctx);
    CHECK((hb - direct).abs() < pow10(-35, bits));
}

TEST_CASE("h correction coefficients") {
    // empty below the degree floor
    CHECK(h_correction_coefficients(-3, Rational(0), Rational(0), Mat2{}).empty());
    CHECK(h_correction_coefficients(-4, Rational(1, 3), Rational(1, 5), Mat2{1, 0, 2, 1}).empty());

    // c = 1, d = 0 specialization: coefficient of z^{k-1} is
    // (-1)^{k-1} B_k(1)/k! * B_{m+2-k}/(m+2-k)!
    long m = 4;
    auto coeffs = h_correction_coefficients(m, Rational(0), Rational(0), Mat2{});
    REQUIRE(coeffs.size() == static_cast<size_t>(m + 3));
    for (long k = 0; k <= m + 2; ++k) {
        Rational expect = bernoulli_poly(static_cast<unsigned long>(k), Rational(1)) /
                          factorial_r(static_cast<unsigned long>(k)) *
                          bernoulli(static_cast<unsigned long>(m + 2 - k)) /
                          factorial_r(static_cast<unsigned long>(m + 2 - k));
        if (k % 2 == 0) expect = -expect;
        CHECK(coeffs[static_cast<size_t>(k)] == expect);
    }

    // c = 2 hand oracle at m = 0
    Rational r1(1, 3), r2(1, 5);
    Mat2 v{1, 0, 2, 1};
    auto c2 = h_correction_coefficients(0, r1, r2, v);
    Rational R1 = r1 + Rational(2) * r2;        // a r1 + c r2 = 11/15
    Rational R2 = r2;                           // b r1 + d r2 with b = 0, d = 1
    Rational rho = R2.frac() * 2 - R1.frac();   // {R2} c - {R1} d
    REQUIRE(c2.size() == 3);
    for (long k = 0; k <= 2; ++k) {
        Rational hand(0);
        for (long j = 1; j <= 2; ++j)
            hand += bernoulli_poly(static_cast<unsigned long>(k), (Rational(j) - R1.frac()) / 2) *
                    bernoulli_poly(static_cast<unsigned long>(2 - k),
                                   ((Rational(j) + rho) / 2).frac());
        hand /= factorial_r(static_cast<unsigned long>(k)) *
                factorial_r(static_cast<unsigned long>(2 - k));
        if (k % 2 == 0) hand = -hand;
        CHECK(c2[static_cast<size_t>(k)] == hand);
    }
}

TEST_CASE("transformation law in the closed-form case") {
    PrecisionContext ctx(45);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal tol = pow10(-40, bits);
    std::vector<BigComplex> zs = {BigComplex(0, 1, bits), BigComplex(0, 2, bits),
                                  BigComplex(BigReal(Rational(1, 2), bits), BigReal(1, bits))};
    for (long m : {0l, 2l, 4l, -1l, -2l, -4l, 3l}) {
        for (const auto& z : zs) {
            auto rep = verify_thmH(z, m, Rational(0), Rational(0), Mat2{}, ctx, tol);
            CHECK(rep.passed);
        }
    }
    // the registry route through the Lambert shortcut agrees
    for (long m : {0l, 2l, 4l}) {
        EisensteinParams p;
        p.m = m;
        p.z = zs[2];
        CHECK(verify(IdentityId::STransform, p, ctx).passed);
    }
}

TEST_CASE("transformation law with vanishing characteristic terms") {
    PrecisionContext ctx(45);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal tol = pow10(-40, bits);
    // the documented example point
    auto rep = verify_thmH(BigComplex(BigReal(0, bits), BigReal(Rational(1, 2), bits)), 3,
                           Rational(1, 3), Rational(1, 5), Mat2{1, 0, 1, 1}, ctx, tol);
    CHECK(rep.passed);

    testutil::Rng rng;
    for (int i = 0; i < 5; ++i) {
        auto t = testutil::random_thmh_tuple(rng, ctx);
        auto r = verify_thmH(t.z, t.m, t.r1, t.r2, Mat2{t.a, t.b, t.c, t.d}, ctx, tol);
        CHECK(r.passed);
    }
}

TEST_CASE("unsupported characteristic cases are rejected") {
    PrecisionContext ctx(30);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(0, 1, bits);
    // r1 integral but not the S specialization
    CHECK_THROWS_AS((void)verify_thmH(z, 2, Rational(1), Rational(1, 5), Mat2{1, 0, 1, 1}, ctx),
                    UnsupportedCase);
    // R1 = 3 * (1/3) + 2 * 0 = 1 integral
    CHECK_THROWS_AS((void)verify_thmH(z, 2, Rational(1, 3), Rational(0), Mat2{3, 1, 2, 1}, ctx),
                    UnsupportedCase);
    // invalid matrices
    CHECK_THROWS_AS((void)verify_thmH(z, 2, Rational(1, 3), Rational(1, 5), Mat2{1, 0, 0, 1}, ctx),
                    ValidationError);
    CHECK_THROWS_AS((void)verify_thmH(z, 2, Rational(1, 3), Rational(1, 5), Mat2{2, 0, 1, 1}, ctx),
                    ValidationError);
}

TEST_CASE("alpha beta constraint is enforced") {
    PrecisionContext ctx(30);
    mpfr_prec_t bits = ctx.working_bits();
    EisensteinParams p;
    p.alpha = BigReal(1, bits);
    p.beta = BigReal(2, bits); // violates alpha*beta = pi^2
    p.n = 1;
    CHECK_THROWS_AS((void)verify(IdentityId::Ramanujan, p, ctx), ValidationError);
    EisensteinParams q; // missing alpha
    q.n = 1;
    CHECK_THROWS_AS((void)verify(IdentityId::Ramanujan, q, ctx), ValidationError);
}

TEST_CASE("default parameters satisfy every schema") {
    PrecisionContext ctx(30);
    for (const auto& info : identity_registry()) {
        auto rep = verify(info.id, default_params(info.id, ctx), ctx);
        CHECK(rep.passed);
    }
}
