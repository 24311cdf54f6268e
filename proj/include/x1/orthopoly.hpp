#ifndef X1_ORTHOPOLY_HPP
#define X1_ORTHOPOLY_HPP

#include <variant>
#include <vector>

#include "x1/polynomial.hpp"
#include "x1/quadrature.hpp"
#include "x1/x1core.hpp"

namespace x1 {

struct JacobiParams {
  Rational alpha, beta;
  /// alpha, beta > -1, alpha != beta, both nonzero with equal sign
  /// (which forces |b| > 1).
  void validate() const;
};

struct LaguerreParams {
  Rational alpha;  // > 0
  void validate() const;
};

using Family = std::variant<JacobiParams, LaguerreParams>;

/// a = (beta-alpha)/2, b = (beta+alpha)/(beta-alpha), c = b + 1/a;
/// p(x) = x^2 - 1 so (k2, k1, k0) = (1, 2b, b^2 - 1).
X1Params jacobi_param_map(const JacobiParams& jp);

/// a = -1, b = -alpha, c = -alpha-1; p(x) = -x so (k2, k1, k0) = (0, -1, alpha).
X1Params laguerre_param_map(const LaguerreParams& lp);

X1Params family_param_map(const Family& fam);

/// The X1-Jacobi polynomial, normalized by
/// Phat_n(1) = ((alpha+n)/(beta-alpha)) * binom(alpha+n-2, n-1). Exact.
Polynomial x1_jacobi(unsigned n, const JacobiParams& jp);

/// The X1-Laguerre polynomial with leading coefficient (-1)^n/(n-1)!. Exact.
Polynomial x1_laguerre(unsigned n, const LaguerreParams& lp);

Rational x1_family_eigenvalue(unsigned n, const Family& fam);
Polynomial x1_family_polynomial(unsigned n, const Family& fam);

/// The sequence the paper orthogonalizes: x-c, (x-b)^2, ..., (x-b)^count.
std::vector<Polynomial> x1_defining_sequence(const Family& fam,
                                             unsigned count);

struct Quad {
  Real value;  // higher-order estimate
  Real error;  // |I_N - I_2N|
  bool converged(const Real& tol) const {
    return error <= tol * (Real(1) + abs(value));
  }
};

/// <P,Q> = integral of w(x) P(x) Q(x) / (x-b)^2 with the classical-weight
/// Gauss rule applied to the smooth rational factor; the value is taken at
/// order 2N with the N-vs-2N difference as the error estimate.
Quad inner_product(const Polynomial& P, const Polynomial& Q,
                   const Family& fam, unsigned order);

struct NormValue {
  /// ||.||^2 / C_{n-1}: the paper's exact rational ratio.
  Rational ratio_to_classical;
  /// C_{n-1} / C_0, exact (Gamma ratios reduced to rising factorials).
  Rational classical_ratio_to_c0;
  /// C_0, the one transcendental constant, at working precision.
  Real c0;
  Real value;  // ratio * classical_ratio * c0
};

/// Closed-form squared norm of the n-th X1 polynomial. Pre: n >= 1.
NormValue norm_formula(unsigned n, const Family& fam);

/// Classical orthonormalization constant C_n as (C_n/C_0, C_0).
Rational classical_norm_ratio_c0(unsigned n, const Family& fam);
Real classical_norm_c0(const Family& fam);

/// Coefficient vector over Real; the Gram-Schmidt layer works here.
struct RealPoly {
  std::vector<Real> c;
  static RealPoly from(const Polynomial& p);
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Real evaluate(const Real& x) const;
  RealPoly& axpy(const Real& s, const RealPoly& o);  // this += s*o
  RealPoly scaled(const Real& s) const;
};

/// Numerical Gram-Schmidt of an exact sequence under the family inner
/// product, with one re-orthogonalization pass. Output spans the same flag.
/// Throws on loss of orthogonality beyond tolerance.
std::vector<RealPoly> gram_schmidt_sequence(const std::vector<Polynomial>& seq,
                                            const Family& fam, unsigned count,
                                            unsigned order);

Real inner_product_real(const RealPoly& p, const RealPoly& q,
                        const Family& fam, unsigned order);

struct EndpointCheck {
  std::string endpoint;      // "x->1-", "x->-1+", "x->0+", "x->inf"
  bool pass = false;
  bool has_exponent_fit = false;
  double fitted_exponent = 0.0;
  double predicted_exponent = 0.0;
  double final_magnitude = 0.0;  // |functional| at the closest approach point
};

struct BoundaryReport {
  std::vector<EndpointCheck> endpoints;
  bool all_pass() const {
    for (const auto& e : endpoints)
      if (!e.pass) return false;
    return true;
  }
};

/// Evaluate the Sturm-Liouville boundary functionals of the family on y at
/// seven approach points per endpoint and fit the decay; passes when the
/// fitted exponent is within 0.1 of the prediction or the magnitude drops
/// below 1e-12. Report-only: never throws on failure.
BoundaryReport check_boundary_conditions(const Polynomial& y,
                                         const Family& fam);

/// Classical Jacobi P_n^(alpha,beta) by the exact three-term recurrence.
Polynomial classical_jacobi(unsigned n, const Rational& alpha,
                            const Rational& beta);
/// Classical Laguerre L_n^(alpha).
Polynomial classical_laguerre(unsigned n, const Rational& alpha);

}  // namespace x1

#endif
