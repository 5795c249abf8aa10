#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zetalab/bigcomplex.hpp"
#include "zetalab/bigreal.hpp"
#include "zetalab/errors.hpp"

using namespace zetalab;

namespace {

// Machin's formula with the arctan series summed by plain multiply/divide;
// shares no code with the backend's pi.
BigReal machin_pi(const PrecisionContext& ctx) {
    mpfr_prec_t bits = ctx.working_bits() + 32;
    auto atan_inv = [&](long q) {
        // atan(1/q) = sum_{j>=0} (-1)^j / ((2j+1) q^(2j+1))
        BigReal acc(0, bits);
        BigReal power = 1 / BigReal(q, bits);
        BigReal q2(q * q, bits);
        BigReal eps = pow10(-(ctx.working_digits() + 6), bits);
        long j = 0;
        while (true) {
            BigReal term = power / (2 * j + 1);
            acc = (j % 2 == 0) ? acc + term : acc - term;
            if (term < eps) break;
            power /= q2;
            ++j;
        }
        return acc;
    };
    return (atan_inv(5) * 4 - atan_inv(239)) * 4;
}

} // namespace

TEST_CASE("pi agrees with an independent Machin evaluation") {
    PrecisionContext ctx(50, 10);
    BigReal diff = abs(const_pi(ctx) - machin_pi(ctx));
    CHECK(diff < pow10(-59, ctx.working_bits()));
}

TEST_CASE("pi is stable across precision contexts") {
    PrecisionContext lo(10, 10), hi(50, 10);
    BigReal diff = abs(const_pi(lo) - const_pi(hi));
    CHECK(diff < pow10(-10, hi.working_bits()));
}

TEST_CASE("pi squared then square-rooted returns pi") {
    PrecisionContext ctx(50, 10);
    BigReal pi = const_pi(ctx);
    CHECK(abs(sqrt(pi * pi) - pi) < pow10(-(ctx.working_digits() - 2), ctx.working_bits()));
}

TEST_CASE("elementary values") {
    PrecisionContext ctx(40);
    mpfr_prec_t bits = ctx.working_bits();
    BigReal tiny = pow10(-(ctx.working_digits() - 2), bits);

    CHECK(abs(exp(BigReal(0, bits)) - 1) < tiny);

    // coth x = 1 + 2/(e^{2x} - 1) at x = 1
    BigReal lhs = coth(BigReal(1, bits), ctx);
    BigReal rhs = 1 + 2 / (exp(BigReal(2, bits)) - 1);
    CHECK(abs(lhs - rhs) < tiny);

    CHECK(abs(cot(const_pi(ctx) / 4, ctx) - 1) < tiny);

    // complex exp/log roundtrip and the principal branch at i
    BigComplex z(BigReal(Rational(3, 7), bits), BigReal(Rational(2, 5), bits));
    BigComplex back = exp(log(z, ctx));
    CHECK((back - z).abs() < tiny);
    BigComplex log_i = log(BigComplex(0, 1, bits), ctx);
    CHECK(abs(log_i.re()) < tiny);
    CHECK(abs(log_i.im() - const_pi(ctx) / 2) < tiny);
}

TEST_CASE("domain errors near poles and branch points") {
    PrecisionContext ctx(30);
    mpfr_prec_t bits = ctx.working_bits();
    CHECK_THROWS_AS((void)log(BigComplex(0, 0, bits), ctx), DomainError);
    CHECK_THROWS_AS((void)cot(const_pi(ctx), ctx), DomainError);
    CHECK_THROWS_AS((void)coth(BigReal(0, bits), ctx), DomainError);
    CHECK_THROWS_AS((void)cot(BigComplex(const_pi(ctx) * 3, pow10(-60, bits)), ctx),
                    DomainError);
    CHECK_THROWS_AS((void)(BigReal(1, bits) / BigReal(0, bits)), DomainError);
}

TEST_CASE("guard doubling leaves results stable") {
    PrecisionContext ctx(30, 15);
    PrecisionContext wide = ctx.with_guard(30);
    BigReal bound = pow10(-ctx.target_digits(), wide.working_bits());
    testutil::Rng rng;
    for (int i = 0; i < 20; ++i) {
        Rational q = rng.rational_in(0, 10); // in (0, 10)
        BigReal x1 = testutil::to_real(q, ctx), x2 = testutil::to_real(q, wide);
        CHECK(abs(exp(x1) - exp(x2)) < bound * exp(x2));
        CHECK(abs(log(x1) - log(x2)) < bound);
        CHECK(abs(coth(x1, ctx) - coth(x2, wide)) < bound);
        Rational qc = q + Rational(1, 3); // keep clear of the cot poles
        BigReal c1 = cot(testutil::to_real(qc, ctx) / 10, ctx);
        BigReal c2 = cot(testutil::to_real(qc, wide) / 10, wide);
        CHECK(abs(c1 - c2) < bound * (1 + abs(c2)));
    }
}

TEST_CASE("exp inverts log across random points") {
    PrecisionContext ctx(35);
    BigReal bound = pow10(-(ctx.working_digits() - 2), ctx.working_bits());
    testutil::Rng rng;
    for (int i = 0; i < 20; ++i) {
        BigReal x = testutil::to_real(rng.rational_in(0, 10), ctx);
        CHECK(abs(exp(log(x)) - x) < bound * (1 + x));
    }
}

TEST_CASE("precision context validates its budget") {
    CHECK_THROWS_AS(PrecisionContext(5), ValidationError);
    CHECK_THROWS_AS(PrecisionContext(50, 5), ValidationError);
    CHECK_THROWS_AS(PrecisionContext(50, 20, 0), ValidationError);
    PrecisionContext ctx(25, 15);
    CHECK(ctx.working_digits() == 40);
    CHECK(ctx.working_bits() > 40 * 3.32);
}

TEST_CASE("upper half-plane predicate") {
    mpfr_prec_t bits = 128;
    CHECK(BigComplex(0, 1, bits).in_upper_half_plane());
    CHECK(!BigComplex(1, 0, bits).in_upper_half_plane());
    CHECK(!BigComplex(0, -1, bits).in_upper_half_plane());
}
