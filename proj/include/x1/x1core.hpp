#ifndef X1_X1CORE_HPP
#define X1_X1CORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "x1/diffop.hpp"
#include "x1/subspace.hpp"

namespace x1 {

/// Parameters (a, b, c, k0, k1, k2) of the X1 operator: p(x) = k2 (x-b)^2 +
/// k1 (x-b) + k0 with k0 = p(b) != 0, and c = b + 1/a. Note the constraint is
/// a(c - b) = 1: the form that makes the operator preserve the flag, the
/// degree-1 kernel element proportional to a(x-b) - 1, and the Jacobi /
/// Laguerre parameter maps consistent.
struct X1Params {
  Rational a, b, c, k0, k1, k2;

  /// Derive c = b + 1/a. Pre: a != 0, k0 != 0.
  static X1Params from_abk(const Rational& a, const Rational& b,
                           const Rational& k0, const Rational& k1,
                           const Rational& k2);
  /// Throws std::invalid_argument unless a(c-b) = 1 and k0 != 0.
  void validate() const;
};

/// T = p D_xx + (qt/(x-b)) D_x + (rt/(x-b)) with qt = a(x-c)(k1(x-b)+2k0)
/// and rt = -a(k1(x-b)+2k0).
DiffOp2 make_x1_operator(const X1Params& params);

/// The codimension-one flag member E^{a,b}_n with basis
/// {a(x-b)-1, (x-b)^2, ..., (x-b)^n}. Pre: n >= 1. a = 0 is allowed here
/// (E^{0,b}_n); the operator construction itself needs a != 0.
Subspace x1_flag_basis(unsigned n, const Rational& a, const Rational& b);

/// lambda_n = (n-1)(n k2 + a k1).
Rational x1_eigenvalue(unsigned n, const X1Params& params);

struct EigenPair {
  unsigned n = 0;
  Polynomial P;     // degree exactly n; coefficient of (x-b)^n equals 1
  Rational lambda;
};

/// Exact eigenpolynomial of degree n, computed by back-substitution on the
/// matrix of T in the flag basis. Throws on resonance lambda_n = lambda_m,
/// m < n, reporting the colliding pair.
EigenPair x1_eigenpoly(unsigned n, const X1Params& params);

struct EigenSolution {
  Rational lambda;
  Polynomial P;  // degree exactly n, monic
};

/// All (rational-eigenvalue) polynomial solutions of T(P) = lambda P with
/// deg P exactly n, decided by exact linear algebra.
std::vector<EigenSolution> polynomial_eigenfunctions(const DiffOp2& T,
                                                     unsigned n);

enum class BochnerClass { Classical, X1, Neither };

struct BochnerReport {
  BochnerClass cls = BochnerClass::Neither;
  std::optional<X1Params> params;          // set for X1
  std::optional<Rational> additive_constant;  // T - make_x1_operator(params)
  std::vector<unsigned> solvable_degrees;  // subset of 0..nmax
  unsigned nmax = 0;
  std::string detail;
};

/// Classify a second-order operator by the solvability pattern of its
/// polynomial eigenproblem for degrees 0..nmax:
///  - Classical: solutions for every n >= 0 and Bochner shape
///    (deg p <= 2, deg q <= 1, r constant);
///  - X1: solutions exactly for n >= 1, with (a,b,c,k0,k1,k2) recovered and
///    T matching the X1 operator up to an additive constant;
///  - Neither: anything else.
/// Pre: nmax >= 5.
BochnerReport verify_bochner_converse(const DiffOp2& T, unsigned nmax);

}  // namespace x1

#endif
