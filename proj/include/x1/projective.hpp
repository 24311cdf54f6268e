#ifndef X1_PROJECTIVE_HPP
#define X1_PROJECTIVE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "x1/mobius.hpp"
#include "x1/roots.hpp"
#include "x1/squarefree.hpp"
#include "x1/subspace.hpp"

namespace x1 {

/// The SL(2,R)-invariant bilinear form on P_n, defined by
/// n! gamma(x^j/j!, x^k/k!) = (-1)^j when j + k = n and 0 otherwise.
/// Symmetric for even n, skew for odd n. Pre: deg p, deg q <= n.
Rational gamma_form(const Polynomial& p, const Polynomial& q, unsigned n);

/// Fundamental covariant q_M from the (n+1)x(n+1) determinant whose last row
/// is ((-1)^j binom(n,j) x^(n-j)); normalized monic. Pre: M has codimension
/// one; throws on a dependent basis.
Polynomial fundamental_covariant(const Subspace& M);

/// Generator of {u : gamma(v, u) = 0 for all v in M}, computed by solving the
/// n linear equations gamma(v_j, u) = 0; normalized monic. Independent route
/// to the covariant. Throws when the solution space is not one-dimensional.
Polynomial phi_annihilator(const Subspace& M);

/// Monomial/binomial basis of M read off the covariant coefficients, valid
/// when q_M has infinity multiplicity lambda and multiplicity mu at zero:
/// {x^j}_{j<lambda}, {x^j + beta_j x^lambda}_{lambda+1<=j<=n-mu},
/// {x^j}_{j>n-mu}. Throws for constant covariant (M = P_{n-1}), which falls
/// outside the binomial window.
std::vector<Polynomial> normalized_basis(const Subspace& M);

/// A point of the projective line: infinity or a complex number, with the
/// exact rational value kept when known.
struct ProjPoint {
  bool inf = false;
  Cplx numeric;
  std::optional<Rational> exact;
  unsigned multiplicity = 0;
};

struct NormalForm {
  RootSignature signature;  // exact, of q in the ambient degree
  /// Multiplicity at infinity after normalization (= the top multiplicity).
  unsigned normalized_infinity_multiplicity = 0;
  /// Finite roots of the normal form with multiplicities, anchors included:
  /// the second and third multiplicity classes land exactly at 0 and 1.
  std::vector<std::pair<Cplx, unsigned>> normalized_roots;
};

/// Root normal form: the exact signature plus the numerically normalized
/// root positions after sending the three highest-multiplicity roots to
/// (infinity, 0, 1). Multiplicities always come from the exact squarefree
/// structure, never from numerics. Pre: q != 0, deg q <= n.
NormalForm normal_form(const Polynomial& q, unsigned n);

enum class EquivalenceStatus { Equivalent, NotEquivalent, Inconclusive };

struct EquivalenceResult {
  EquivalenceStatus status = EquivalenceStatus::NotEquivalent;
  std::optional<MobiusMap> witness;  // set iff Equivalent
  std::string detail;
};

/// Decide projective equivalence of two codimension-one subspaces. Signature
/// mismatch is a complete obstruction. Matching signatures trigger a finite
/// search over Mobius maps determined by anchor-root assignments; every
/// candidate accepted as a witness is verified exactly on the basis spans.
/// Inconclusive is reported when a candidate matches the root data
/// numerically but no exact rational witness could be verified.
EquivalenceResult subspace_equivalent(const Subspace& M1, const Subspace& M2);

/// Point list of a covariant: classified finite roots plus infinity,
/// deterministically ordered by (multiplicity desc, infinity first, exact
/// rational roots, real roots, complex roots).
std::vector<ProjPoint> covariant_points(const Polynomial& q, unsigned n);

}  // namespace x1

#endif
