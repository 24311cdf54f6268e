#ifndef X1_OPSOLVE_HPP
#define X1_OPSOLVE_HPP

#include <optional>

#include "x1/diffop.hpp"
#include "x1/subspace.hpp"

namespace x1 {

/// A finite-dimensional space of second-order operators attached to an
/// ambient degree.
struct OperatorSpace {
  unsigned n = 0;
  std::vector<DiffOp2> basis;
  unsigned dimension() const { return static_cast<unsigned>(basis.size()); }
};

/// D_2(M) within the ansatz T = (ptilde D_xx + qtilde D_x + rtilde) / d,
/// deg ptilde, qtilde, rtilde <= numerator_degree_bound: the exact nullspace
/// of the linear system "T(v_i) lies in M" over the ansatz coefficients.
/// Solved by fraction-free elimination; deterministic basis.
OperatorSpace preserving_operators(const Subspace& M,
                                   const Polynomial& denominator,
                                   unsigned numerator_degree_bound);

/// The nine-operator basis of D_2(P_n). Pre: n >= 2.
OperatorSpace lie_basis(unsigned n);

/// The sl(2) generators T_-, T_0, T_+ (first-order; T_0 has the -n/2 shift).
DiffOp2 sl2_lowering(unsigned n);
DiffOp2 sl2_neutral(unsigned n);
DiffOp2 sl2_raising(unsigned n);

/// The seven-operator basis J_1..J_7 of D_2(E^{a,b}_n). Pre: n >= 2.
OperatorSpace j_basis(unsigned n, const Rational& a, const Rational& b);

enum class ExceptionalClass {
  NotExceptional,
  Exceptional,
  /// Subspaces with constant covariant (M = P_{n-1}); formally exceptional
  /// under the definition but excluded from the classification theorem's
  /// multiplicity <= n-2 hypothesis, so reported as their own class.
  TriviallyExceptionalPn1,
};

struct ExceptionalReport {
  ExceptionalClass cls = ExceptionalClass::NotExceptional;
  std::optional<DiffOp2> witness;  // an operator in D_2(M) \ D_2(P_n)
  unsigned solver_dimension = 0;
  bool saturated = true;  // dimension stable when the degree bound doubles
  Polynomial ansatz_denominator;
  unsigned ansatz_bound = 0;
};

struct ExceptionalOptions {
  bool saturation_check = true;
};

/// Decide whether D_2(M) is contained in D_2(P_n) within the default ansatz
/// (denominator q_M^2, numerator bound n + deg q_M^2 + 2, doubled once as a
/// saturation check). Pre: M has codimension one.
ExceptionalReport is_exceptional(const Subspace& M,
                                 const ExceptionalOptions& opt = {});

}  // namespace x1

#endif
