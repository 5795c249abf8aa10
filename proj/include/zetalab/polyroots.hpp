#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetalab/bigcomplex.hpp"
#include "zetalab/dirichlet.hpp"
#include "zetalab/precision.hpp"
#include "zetalab/rational_poly.hpp"

namespace zetalab {

// Dense polynomial with BigComplex coefficients, index = degree.
class ComplexPoly {
  public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<BigComplex> coeffs);
    static ComplexPoly from_rational(const RationalPoly& p, mpfr_prec_t bits);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigComplex>& coeffs() const { return c_; }
    const BigComplex& coeff(size_t k) const { return c_[k]; }

    BigComplex eval(const BigComplex& z) const;
    BigComplex eval_derivative(const BigComplex& z) const;
    // Largest coefficient magnitude (residual scale).
    BigReal coeff_norm() const;
    // True when every coefficient has exactly zero imaginary part.
    bool has_real_coeffs() const;

  private:
    std::vector<BigComplex> c_;
};

struct RootCertificate {
    BigComplex root;
    BigReal residual;             // |p(root)| / coeff_norm
    bool is_real = false;
    BigReal unit_circle_distance; // | |root| - 1 |
};

struct UnimodularityReport {
    std::string poly_id;
    std::vector<RootCertificate> roots;
    long num_real = 0;
    BigReal max_unit_distance; // over the inspected root class
    bool verdict = false;
    BigReal tolerance;
};

enum class CircleClass { NonrealOnly, AllRoots };

// R_{2m+1}(z) = sum_{n=0}^{m+1} B_{2n}/(2n)! B_{2m+2-2n}/(2m+2-2n)! z^{2n}, exact.
RationalPoly ramanujan_poly(long m);

// R_{2m+1}(z) + zeta(2m+1)/(2 pi i)^{2m+1} (z^{2m+1} - z), coefficients
// rendered at twice the working precision.
ComplexPoly full_period_poly(long m, const PrecisionContext& ctx);

// The degree-2m period polynomial p_m and its odd part divided by z.
ComplexPoly pm_poly(long m, const PrecisionContext& ctx);
ComplexPoly pm_odd_over_z(long m, const PrecisionContext& ctx);

// Exact z * R_k(z; chi, psi): always a polynomial in z.
// With M <= 0 the modulus of psi is used.
RationalPoly generalized_R_times_z(long k, const DirichletCharacter& chi,
                                   const DirichletCharacter& psi, long M = 0);

// R_k(z; chi, psi) itself; NotAPolynomial when the exact z^-1 coefficient
// survives (it vanishes whenever chi is nonprincipal).
ComplexPoly generalized_R(long k, const DirichletCharacter& chi, const DirichletCharacter& psi,
                          long M, mpfr_prec_t bits);

// All roots with residual certificates: simultaneous iteration at working
// precision, then individual refinement at doubled precision.  Roots are
// sorted by (Re, Im).  ConvergenceError if iteration stalls or a residual
// misses the certificate bound 10^-(target/2).
std::vector<RootCertificate> find_roots(const ComplexPoly& p, const PrecisionContext& ctx);

// Count real roots and measure the distance to the unit circle over the
// inspected class (nonreal roots only, or all roots).
UnimodularityReport unimodularity_report(const std::string& poly_id, const ComplexPoly& p,
                                         const PrecisionContext& ctx, CircleClass circle_class,
                                         std::optional<BigReal> tolerance = std::nullopt);

} // namespace zetalab
