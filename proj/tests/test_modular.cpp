#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/modular.hpp"
#include "zetalab/series.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;

TEST_CASE("divisor power sums") {
    CHECK(sigma(1, 6) == Rational(12));
    CHECK(sigma(0, 1) == Rational(1));
    CHECK(sigma(-3, 4) == Rational(73, 64));
    CHECK(sigma(3, 4) == Rational(73));
    CHECK_THROWS_AS((void)sigma(1, 0), DomainError);
}

TEST_CASE("exact q-coefficient identity n^(2m+1) sigma_-(2m+1)(n) = sigma_(2m+1)(n)") {
    for (long m = 0; m <= 4; ++m)
        for (long n = 1; n <= 200; ++n)
            CHECK(Rational(n).pow_int(2 * m + 1) * sigma(-(2 * m + 1), n) ==
                  sigma(2 * m + 1, n));
}

TEST_CASE("applying D to the Lambert series recovers positive divisor sums") {
    for (long m : {1l, 2l, 4l}) {
        QSeries f = lambert_q_series(2 * m + 1, 200);
        QSeries lifted = f.apply_D(2 * m + 1);
        for (long n = 1; n <= 200; ++n)
            CHECK(lifted.coeffs[static_cast<size_t>(n)] == sigma(2 * m + 1, n));
    }
}

TEST_CASE("Lambert and q-expansion routes agree") {
    PrecisionContext ctx(35);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal eps = pow10(-ctx.target_digits(), bits);
    testutil::Rng rng;
    for (int i = 0; i < 10; ++i) {
        long a = 2 + rng.below(11);
        BigComplex z(BigReal(Rational(rng.below(17) - 8, 16), bits),
                     BigReal(Rational(6 + rng.below(20), 16), bits));
        BigComplex f1 = lambert_F(a, z, ctx);
        BigComplex f2 = lambert_F_qexp(a, z, ctx);
        CHECK((f1 - f2).abs() < eps);
    }
}

TEST_CASE("F_3(i) matches the real exponential-fraction sum") {
    PrecisionContext ctx(40);
    BigComplex f = lambert_F(3, BigComplex(0, 1, ctx.working_bits()), ctx);
    BigReal direct = exp_frac_sum(3, const_pi(ctx), ctx);
    CHECK(abs(f.re() - direct) < pow10(-40, ctx.working_bits()));
    CHECK(abs(f.im()) < pow10(-40, ctx.working_bits()));
}

TEST_CASE("large index makes the first term dominate") {
    PrecisionContext ctx(30);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex f = lambert_F(25, BigComplex(0, 1, bits), ctx);
    BigReal q = exp(-(const_pi(ctx) * 2));
    CHECK(abs(f.re() - q) < q * q * 2);
}

TEST_CASE("Eisenstein q-coefficients") {
    QSeries e4 = eisenstein_q_series(4, 3);
    CHECK(e4.coeffs[0] == Rational(1));
    CHECK(e4.coeffs[1] == Rational(240));
    QSeries e2 = eisenstein_q_series(2, 3);
    CHECK(e2.coeffs[1] == Rational(-24));
    QSeries e6 = eisenstein_q_series(6, 2);
    CHECK(e6.coeffs[1] == Rational(-504));
}

TEST_CASE("Eisenstein series agrees with its Lambert-sum form") {
    // E_k = 1 + (2/zeta(1-k)) F_{1-k}: the divisor-sum q-expansion and the
    // Lambert summation are independent routes to the same value
    PrecisionContext ctx(40);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(BigReal(Rational(1, 5), bits), BigReal(Rational(4, 5), bits));
    for (long k : {2l, 4l, 8l}) {
        BigComplex via_series = eisenstein_E(k, z, ctx);
        BigReal scale(Rational(2) / zeta_negative_odd(k / 2), bits);
        BigComplex via_lambert = BigComplex(1, 0, bits) + scale * lambert_F(1 - k, z, ctx);
        CHECK((via_series - via_lambert).abs() < pow10(-40, bits));
    }
}

TEST_CASE("Eisenstein series is 1-periodic") {
    PrecisionContext ctx(35);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(BigReal(Rational(1, 3), bits), BigReal(1, bits));
    BigComplex z1 = z + BigComplex(1, 0, bits);
    for (long k : {2l, 4l, 8l})
        CHECK((eisenstein_E(k, z, ctx) - eisenstein_E(k, z1, ctx)).abs() <
              pow10(-35, bits));
}

TEST_CASE("modularity of E_k on sample points") {
    PrecisionContext ctx(40);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal tol = pow10(-40, bits);
    for (long k : {4l, 6l, 8l, 10l, 12l}) {
        for (int j = 0; j < 10; ++j) {
            BigComplex z(BigReal(Rational(j - 5, 10), bits),
                         BigReal(Rational(8 + j, 10), bits));
            auto rep = check_modularity(k, z, ctx, tol);
            CHECK(rep.passed);
        }
    }
    // E_6(i) = 0 is forced by i^-6 = -1
    CHECK(eisenstein_E(6, BigComplex(0, 1, bits), ctx).abs() < pow10(-39, bits));
    CHECK_THROWS_AS((void)check_modularity(2, BigComplex(0, 1, bits), ctx), DomainError);
}

TEST_CASE("quasimodular law of E_2") {
    PrecisionContext ctx(40);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal tol = pow10(-40, bits);
    CHECK(check_quasimodular_E2(BigComplex(0, 1, bits), ctx, tol).passed);
    CHECK(check_quasimodular_E2(BigComplex(0, 2, bits), ctx, tol).passed);
    CHECK(check_quasimodular_E2(BigComplex(1, 1, bits), ctx, tol).passed);
    // at the fixed point z = i the law pins E_2(i) = 3/pi
    BigComplex e2 = eisenstein_E(2, BigComplex(0, 1, bits), ctx);
    CHECK(abs(e2.re() - 3 / const_pi(ctx)) < tol);
    // translate consistency
    CHECK((eisenstein_E(2, BigComplex(1, 1, bits), ctx) -
           eisenstein_E(2, BigComplex(0, 1, bits), ctx))
              .abs() < tol);
}

TEST_CASE("Eichler integral combines the zeta head with the Lambert tail") {
    PrecisionContext ctx(40);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(0, 1, bits);
    BigComplex g = eichler_G(1, z, ctx);
    BigComplex two_pi_i_z = BigComplex(BigReal(0, bits), const_pi(ctx) * 2) * z;
    BigComplex head = BigReal(zeta_negative_odd(2) / 2 / factorial_r(3), bits) *
                      pow_int(two_pi_i_z, 3);
    BigComplex tail = lambert_F(3, z, ctx);
    CHECK((g - head - tail).abs() < pow10(-40, bits));

    // for large Im z the Lambert tail vanishes
    BigComplex far(0, 40, bits);
    BigComplex gf = eichler_G(1, far, ctx);
    BigComplex head_far = BigReal(zeta_negative_odd(2) / 2 / factorial_r(3), bits) *
                          pow_int(BigComplex(BigReal(0, bits), const_pi(ctx) * 2) * far, 3);
    CHECK((gf - head_far).abs() < pow10(-40, bits));
}

TEST_CASE("period relation across m and sample points") {
    PrecisionContext ctx(45);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal tol = pow10(-40, bits);
    CHECK(check_period_relation(1, BigComplex(0, 1, bits), ctx, tol).passed);
    CHECK(check_period_relation(2, BigComplex(BigReal(Rational(1, 3), bits), BigReal(1, bits)),
                                ctx, tol)
              .passed);
    for (long m = 1; m <= 5; ++m) {
        BigComplex z(BigReal(Rational(m - 3, 7), bits), BigReal(Rational(9, 8), bits));
        CHECK(check_period_relation(m, z, ctx, tol).passed);
    }
}

TEST_CASE("critical L-value polynomial equals the period polynomial exactly") {
    for (long m = 1; m <= 5; ++m) {
        long k = 2 * m + 2;
        auto rw = razar_weil_exact(k);
        auto pp = period_polynomial_exact(k);
        REQUIRE(rw.size() == pp.size());
        for (size_t j = 0; j < rw.size(); ++j) {
            CHECK(rw[j].zeta_mult == pp[j].zeta_mult);
            CHECK(rw[j].twopii_mult == pp[j].twopii_mult);
        }
        // interior even coefficients vanish (trivial zeros)
        for (size_t j = 2; j + 2 < rw.size(); j += 2) {
            CHECK(rw[j].zeta_mult.is_zero());
            CHECK(rw[j].twopii_mult.is_zero());
        }
    }
}

TEST_CASE("critical L-value polynomial matches the transformation numerically") {
    PrecisionContext ctx(40);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex z(BigReal(Rational(1, 3), bits), BigReal(1, bits));
    for (long k : {4l, 6l}) {
        BigComplex rw = razar_weil_rhs(k, z, ctx);
        BigComplex pp = period_polynomial_value((k - 2) / 2, z, ctx);
        CHECK((rw - pp).abs() < pow10(-40, bits));
        // and against the Eichler transformation itself
        BigComplex w = -(BigComplex(1, 0, bits) / z);
        BigComplex lhs = pow_int(z, k - 2) * eichler_G((k - 2) / 2, w, ctx) -
                         eichler_G((k - 2) / 2, z, ctx);
        CHECK((lhs - rw).abs() < pow10(-40, bits));
    }
}

TEST_CASE("odd zeta values return from Eichler integral differences") {
    PrecisionContext ctx(50);
    CHECK_THROWS_AS((void)zeta_from_eichler(1, ctx), NoSuchRoot);
    // every nonreal root of the m = 2 and m = 3 polynomials is a 2m-th
    // root of unity, so the recovery denominator collapses
    CHECK_THROWS_AS((void)zeta_from_eichler(2, ctx), IllConditioned);
    CHECK_THROWS_AS((void)zeta_from_eichler(3, ctx), IllConditioned);
    BigReal eps = pow10(-30, ctx.working_bits());
    CHECK(abs(zeta_from_eichler(4, ctx) - zeta_odd_oracle(9, ctx).value) < eps);
    CHECK(abs(zeta_from_eichler(5, ctx) - zeta_odd_oracle(11, ctx).value) < eps);
}

TEST_CASE("evaluation points below the imaginary floor are rejected") {
    PrecisionContext ctx(30);
    mpfr_prec_t bits = ctx.working_bits();
    BigComplex low(BigReal(0, bits), pow10(-4, bits));
    CHECK_THROWS_AS((void)lambert_F(3, low, ctx), DomainError);
    CHECK_THROWS_AS((void)eisenstein_E(4, low, ctx), DomainError);
    CHECK_THROWS_AS((void)eichler_G(1, BigComplex(1, -1, bits), ctx), DomainError);
}
