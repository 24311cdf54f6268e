#ifndef X1_DIFFOP_HPP
#define X1_DIFFOP_HPP

#include <vector>

#include "x1/mobius.hpp"
#include "x1/rational_function.hpp"
#include "x1/subspace.hpp"

namespace x1 {

/// Second-order operator T = p D_xx + q D_x + r with rational-function
/// coefficients, each kept reduced.
struct DiffOp2 {
  RationalFunction p, q, r;

  DiffOp2() = default;
  DiffOp2(RationalFunction p_, RationalFunction q_, RationalFunction r_)
      : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)) {}

  bool operator==(const DiffOp2& o) const {
    return p == o.p && q == o.q && r == o.r;
  }

  DiffOp2 operator+(const DiffOp2& o) const {
    return DiffOp2(p + o.p, q + o.q, r + o.r);
  }
  DiffOp2 operator-(const DiffOp2& o) const {
    return DiffOp2(p - o.p, q - o.q, r - o.r);
  }
  DiffOp2 operator*(const Rational& s) const {
    return DiffOp2(p * s, q * s, r * s);
  }
  bool is_zero() const { return p.is_zero() && q.is_zero() && r.is_zero(); }
};

inline DiffOp2 operator*(const Rational& s, const DiffOp2& T) { return T * s; }

/// Exact p y'' + q y' + r y.
RationalFunction apply(const DiffOp2& T, const Polynomial& y);

/// Coefficient transformation law under the weight-n projective action; the
/// transformed operator satisfies That(yhat) = (gamma x + delta)^n (T y o zeta)
/// whenever yhat is the weight-n image of y. Exact.
DiffOp2 transform_operator(const DiffOp2& T, const MobiusMap& g, unsigned n);

/// Degree-homogeneous component T_k = x^k (a x^2 D_xx + b x D_x + c), which
/// maps x^j to a multiple of x^(j+k).
struct GradedComponent {
  int k = 0;
  Rational a, b, c;
};

/// Laurent decomposition of T into graded components. Requires every
/// coefficient denominator to be a power of x (poles only at 0 and infinity);
/// throws otherwise. The components sum back to T exactly.
std::vector<GradedComponent> graded_components(const DiffOp2& T);

/// Reassemble an operator from graded components.
DiffOp2 diffop_from_graded(const std::vector<GradedComponent>& parts);

/// Exact membership tests. "Preserves P_n" is tested on the monomial basis:
/// polynomial output of degree <= n for every x^j, j = 0..n.
bool preserves_pn(const DiffOp2& T, unsigned n);
bool preserves_subspace(const DiffOp2& T, const Subspace& M);

/// Commutator [A, B] = AB - BA of two first-order operators given as
/// q D_x + r (p must be zero); the result is again first order.
DiffOp2 commutator_first_order(const DiffOp2& A, const DiffOp2& B);

}  // namespace x1

#endif
