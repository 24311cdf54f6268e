#ifndef X1_QUADRATURE_HPP
#define X1_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "x1/numbers.hpp"

namespace x1 {

/// Gaussian quadrature against a classical weight, built at the working
/// precision: node seeds from the double-precision Golub-Welsch eigenproblem,
/// refined by Newton iteration on the orthonormal three-term recurrence;
/// weights w_i = 1 / sum_k ptilde_k(x_i)^2. Exact for polynomials of degree
/// <= 2N-1 against the pure classical weight.
class QuadratureRule {
 public:
  enum class Kind { GaussJacobi, GaussLaguerre };

  /// Weight (1-x)^alpha (1+x)^beta on [-1,1]. Pre: alpha, beta > -1.
  static const QuadratureRule& gauss_jacobi(const Rational& alpha,
                                            const Rational& beta,
                                            unsigned order);
  /// Weight x^alpha e^{-x} on [0, inf). Pre: alpha > -1.
  static const QuadratureRule& gauss_laguerre(const Rational& alpha,
                                              unsigned order);

  Kind kind() const { return kind_; }
  unsigned order() const { return order_; }
  const std::vector<Real>& nodes() const { return nodes_; }
  const std::vector<Real>& weights() const { return weights_; }

  /// sum_i w_i f(x_i); the classical weight is absorbed by the rule.
  Real integrate(const std::function<Real(const Real&)>& f) const;

 private:
  QuadratureRule() = default;
  /// Build nodes/weights from the monic recurrence coefficients a_k, b_k
  /// (b_0 = integral of the weight).
  void build(const std::vector<Real>& a, const std::vector<Real>& b);

  Kind kind_ = Kind::GaussJacobi;
  Rational alpha_, beta_;
  unsigned order_ = 0;
  std::vector<Real> nodes_, weights_;
};

/// Gamma(q) at the working precision.
Real gamma_real(const Rational& q);

}  // namespace x1

#endif
