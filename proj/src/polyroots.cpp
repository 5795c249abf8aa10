#include "zetalab/polyroots.hpp"

#include <algorithm>

#include "zetalab/bernoulli.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

ComplexPoly::ComplexPoly(std::vector<BigComplex> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) throw ValidationError("ComplexPoly: zero polynomial");
}

ComplexPoly ComplexPoly::from_rational(const RationalPoly& p, mpfr_prec_t bits) {
    if (p.is_zero()) throw ValidationError("ComplexPoly: zero polynomial");
    std::vector<BigComplex> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs())
        c.emplace_back(BigReal(q, bits), BigReal(0, bits));
    return ComplexPoly(std::move(c));
}

BigComplex ComplexPoly::eval(const BigComplex& z) const {
    mpfr_prec_t bits = std::max(z.prec_bits(), c_.back().prec_bits());
    BigComplex acc(0, 0, bits);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
}

BigComplex ComplexPoly::eval_derivative(const BigComplex& z) const {
    mpfr_prec_t bits = std::max(z.prec_bits(), c_.back().prec_bits());
    BigComplex acc(0, 0, bits);
    for (size_t i = c_.size(); i-- > 1;)
        acc = acc * z + c_[i] * BigReal(static_cast<long>(i), bits);
    return acc;
}

BigReal ComplexPoly::coeff_norm() const {
    BigReal norm(0, c_.back().prec_bits());
    for (const auto& c : c_) norm = max(norm, c.abs());
    return norm;
}

bool ComplexPoly::has_real_coeffs() const {
    for (const auto& c : c_)
        if (!c.im().is_zero()) return false;
    return true;
}

RationalPoly ramanujan_poly(long m) {
    if (m < 0) throw DomainError("ramanujan_poly: m must be >= 0");
    std::vector<Rational> coeffs(static_cast<size_t>(2 * m + 3), Rational(0));
    for (long n = 0; n <= m + 1; ++n) {
        coeffs[static_cast<size_t>(2 * n)] =
            bernoulli(static_cast<unsigned long>(2 * n)) /
            factorial_r(static_cast<unsigned long>(2 * n)) *
            bernoulli(static_cast<unsigned long>(2 * m + 2 - 2 * n)) /
            factorial_r(static_cast<unsigned long>(2 * m + 2 - 2 * n));
    }
    return RationalPoly(std::move(coeffs));
}

namespace {

// Polynomial coefficients are rendered at twice the working precision so
// the refinement stage has headroom below the solve precision.
PrecisionContext doubled(const PrecisionContext& ctx) {
    return ctx.with_extra_guard(ctx.working_digits());
}

} // namespace

// Degree 2m+2: the top term of R_{2m+1} survives above the z^{2m+1} shift.
ComplexPoly full_period_poly(long m, const PrecisionContext& ctx) {
    if (m < 1) throw DomainError("full_period_poly: m must be >= 1");
    PrecisionContext wctx = doubled(ctx);
    mpfr_prec_t bits = wctx.working_bits();
    RationalPoly r = ramanujan_poly(m);
    BigReal zeta = zeta_odd_fast(2 * m + 1, wctx).value;
    BigComplex scale = BigComplex(zeta) *
                       pow_int(BigComplex(BigReal(0, bits), const_pi(wctx) * 2), -(2 * m + 1));
    std::vector<BigComplex> c(static_cast<size_t>(2 * m + 3), BigComplex(0, 0, bits));
    for (size_t i = 0; i < r.coeffs().size(); ++i)
        c[i] = BigComplex(BigReal(r.coeffs()[i], bits), BigReal(0, bits));
    c[static_cast<size_t>(2 * m + 1)] += scale;
    c[1] -= scale;
    return ComplexPoly(std::move(c));
}

ComplexPoly pm_poly(long m, const PrecisionContext& ctx) {
    if (m < 1) throw DomainError("pm_poly: m must be >= 1");
    PrecisionContext wctx = doubled(ctx);
    mpfr_prec_t bits = wctx.working_bits();
    BigReal zeta = zeta_odd_fast(2 * m + 1, wctx).value;
    BigComplex half_pow = pow_int(BigComplex(BigReal(0, bits), const_pi(wctx) * 2), 2 * m + 1) *
                          BigReal(Rational(1, 2), bits);
    std::vector<BigComplex> c(static_cast<size_t>(2 * m + 1), BigComplex(0, 0, bits));
    c[0] = BigComplex(zeta / 2);
    c[static_cast<size_t>(2 * m)] = BigComplex(-(zeta / 2));
    for (long n = 1; n <= m; ++n) {
        Rational q = bernoulli(static_cast<unsigned long>(2 * n)) /
                     factorial_r(static_cast<unsigned long>(2 * n)) *
                     bernoulli(static_cast<unsigned long>(2 * m - 2 * n + 2)) /
                     factorial_r(static_cast<unsigned long>(2 * m - 2 * n + 2));
        c[static_cast<size_t>(2 * n - 1)] = -(half_pow * BigReal(q, bits));
    }
    return ComplexPoly(std::move(c));
}

ComplexPoly pm_odd_over_z(long m, const PrecisionContext& ctx) {
    if (m < 1) throw DomainError("pm_odd_over_z: m must be >= 1");
    PrecisionContext wctx = doubled(ctx);
    mpfr_prec_t bits = wctx.working_bits();
    BigComplex half_pow = pow_int(BigComplex(BigReal(0, bits), const_pi(wctx) * 2), 2 * m + 1) *
                          BigReal(Rational(1, 2), bits);
    std::vector<BigComplex> c(static_cast<size_t>(2 * m - 1), BigComplex(0, 0, bits));
    for (long n = 1; n <= m; ++n) {
        Rational q = bernoulli(static_cast<unsigned long>(2 * n)) /
                     factorial_r(static_cast<unsigned long>(2 * n)) *
                     bernoulli(static_cast<unsigned long>(2 * m - 2 * n + 2)) /
                     factorial_r(static_cast<unsigned long>(2 * m - 2 * n + 2));
        c[static_cast<size_t>(2 * n - 2)] = -(half_pow * BigReal(q, bits));
    }
    return ComplexPoly(std::move(c));
}

RationalPoly generalized_R_times_z(long k, const DirichletCharacter& chi,
                                   const DirichletCharacter& psi, long M) {
    if (k < 2) throw DomainError("generalized_R: k must be >= 2");
    if (M <= 0) M = psi.modulus();
    // z (z-1) M^(k-1) R_k(z) = sum_s B_{s,chi}/s! B_{k-s,psi}/(k-s)! M^s (z-1)^(k-s) (z - z^s);
    // the right side is divisible by (z-1) for every character pair.
    RationalPoly z_minus_1(std::vector<Rational>{Rational(-1), Rational(1)});
    RationalPoly acc;
    RationalPoly zm1_pow(std::vector<Rational>{Rational(1)}); // (z-1)^0, built downward
    std::vector<RationalPoly> zm1_powers(static_cast<size_t>(k) + 1);
    zm1_powers[0] = zm1_pow;
    for (long i = 1; i <= k; ++i) zm1_powers[static_cast<size_t>(i)] = zm1_powers[static_cast<size_t>(i - 1)] * z_minus_1;

    for (long s = 0; s <= k; ++s) {
        if (s == 1) continue; // (z - z^1) = 0
        Rational coeff = generalized_bernoulli(static_cast<unsigned long>(s), chi) /
                         factorial_r(static_cast<unsigned long>(s)) *
                         generalized_bernoulli(static_cast<unsigned long>(k - s), psi) /
                         factorial_r(static_cast<unsigned long>(k - s)) *
                         Rational(M).pow_int(s);
        if (coeff.is_zero()) continue;
        // z - z^s  (for s = 0: z - 1)
        RationalPoly tail;
        if (s == 0) {
            tail = z_minus_1;
        } else {
            std::vector<Rational> t(static_cast<size_t>(s) + 1, Rational(0));
            t[1] = Rational(1);
            t[static_cast<size_t>(s)] += Rational(-1);
            tail = RationalPoly(std::move(t));
        }
        acc = acc + zm1_powers[static_cast<size_t>(k - s)] * tail * coeff;
    }
    if (acc.is_zero()) return RationalPoly();
    return acc.divide_by_linear(Rational(1)) * Rational(M).pow_int(1 - k);
}

ComplexPoly generalized_R(long k, const DirichletCharacter& chi, const DirichletCharacter& psi,
                          long M, mpfr_prec_t bits) {
    RationalPoly zr = generalized_R_times_z(k, chi, psi, M);
    if (zr.is_zero()) throw ValidationError("generalized_R: identically zero for this pair");
    if (!zr.coeff(0).is_zero())
        throw NotAPolynomial("generalized_R: z^-1 coefficient " + zr.coeff(0).str() +
                             " survives (chi is principal)");
    return ComplexPoly::from_rational(zr.divide_by_x(), bits);
}

std::vector<RootCertificate> find_roots(const ComplexPoly& p, const PrecisionContext& ctx) {
    long deg = p.degree();
    if (deg < 1) throw ValidationError("find_roots: degree must be >= 1");
    mpfr_prec_t solve_bits = ctx.working_bits();
    mpfr_prec_t refine_bits = 2 * solve_bits;

    // monic copy at refinement precision
    std::vector<BigComplex> monic(static_cast<size_t>(deg) + 1);
    {
        BigComplex lead = p.coeff(static_cast<size_t>(deg));
        for (size_t i = 0; i <= static_cast<size_t>(deg); ++i) monic[i] = p.coeff(i) / lead;
    }
    ComplexPoly pm(monic);

    // simultaneous (Durand-Kerner) sweep at solve precision
    std::vector<BigComplex> roots;
    roots.reserve(static_cast<size_t>(deg));
    {
        BigComplex seed(BigReal(Rational(2, 5), solve_bits), BigReal(Rational(9, 10), solve_bits));
        BigComplex acc(1, 0, solve_bits);
        for (long j = 0; j < deg; ++j) {
            acc *= seed;
            roots.push_back(acc);
        }
    }
    BigReal stop = pow10(-(ctx.working_digits() - 4), solve_bits);
    long max_sweeps = 500 + 40 * deg;
    bool converged = false;
    for (long it = 0; it < max_sweeps; ++it) {
        BigReal worst(0, solve_bits);
        for (long j = 0; j < deg; ++j) {
            BigComplex den(1, 0, solve_bits);
            for (long l = 0; l < deg; ++l) {
                if (l == j) continue;
                den *= roots[static_cast<size_t>(j)] - roots[static_cast<size_t>(l)];
            }
            BigComplex delta = pm.eval(roots[static_cast<size_t>(j)]) / den;
            roots[static_cast<size_t>(j)] -= delta;
            worst = max(worst, delta.abs());
        }
        if (worst < stop) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("find_roots: simultaneous iteration did not converge in " +
                               std::to_string(max_sweeps) + " sweeps");

    // individual Newton refinement; the doubled-precision coefficients
    // promote the iterates to refinement precision on the first step
    for (auto& r : roots) {
        BigComplex z = r;
        for (int step = 0; step < 12; ++step) {
            BigComplex d = pm.eval_derivative(z);
            if (d.is_zero()) break;
            z -= pm.eval(z) / d;
        }
        r = z;
    }

    BigReal norm = pm.coeff_norm();
    BigReal cert_bound = pow10(-(ctx.target_digits() / 2), refine_bits);
    BigReal real_threshold = cert_bound;
    bool realifiable = pm.has_real_coeffs();

    std::vector<RootCertificate> certs;
    certs.reserve(roots.size());
    for (auto& r : roots) {
        RootCertificate cert;
        cert.is_real = false;
        if (realifiable && abs(r.im()) < real_threshold) {
            // pull the candidate onto the real axis and re-refine there
            BigReal x = r.re();
            for (int step = 0; step < 12; ++step) {
                BigComplex zx(x, BigReal(0, refine_bits));
                BigComplex d = pm.eval_derivative(zx);
                if (d.abs().is_zero()) break;
                x -= (pm.eval(zx) / d).re();
            }
            BigComplex zx(x, BigReal(0, refine_bits));
            if (pm.eval(zx).abs() / norm < cert_bound) {
                r = zx;
                cert.is_real = true;
            }
        }
        cert.root = r;
        cert.residual = pm.eval(r).abs() / norm;
        cert.unit_circle_distance = abs(r.abs() - 1);
        if (!(cert.residual < cert_bound))
            throw ConvergenceError("find_roots: residual " + cert.residual.str(6) +
                                   " misses the certificate bound");
        certs.push_back(std::move(cert));
    }

    std::sort(certs.begin(), certs.end(), [](const RootCertificate& a, const RootCertificate& b) {
        if (a.root.re() < b.root.re()) return true;
        if (b.root.re() < a.root.re()) return false;
        return a.root.im() < b.root.im();
    });
    return certs;
}

UnimodularityReport unimodularity_report(const std::string& poly_id, const ComplexPoly& p,
                                         const PrecisionContext& ctx, CircleClass circle_class,
                                         std::optional<BigReal> tolerance) {
    UnimodularityReport rep;
    rep.poly_id = poly_id;
    rep.roots = find_roots(p, ctx);
    rep.tolerance = tolerance ? *tolerance
                              : pow10(-(ctx.target_digits() / 2), ctx.working_bits());
    rep.max_unit_distance = BigReal(0, ctx.working_bits());
    bool inspected_any = false;
    for (const auto& cert : rep.roots) {
        if (cert.is_real) ++rep.num_real;
        if (circle_class == CircleClass::NonrealOnly && cert.is_real) continue;
        inspected_any = true;
        rep.max_unit_distance = max(rep.max_unit_distance, cert.unit_circle_distance);
    }
    rep.verdict = !inspected_any || rep.max_unit_distance < rep.tolerance;
    return rep;
}

} // namespace zetalab
