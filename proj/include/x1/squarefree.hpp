#ifndef X1_SQUAREFREE_HPP
#define X1_SQUAREFREE_HPP

#include <utility>
#include <vector>

#include "x1/polynomial.hpp"

namespace x1 {

/// Discrete projective invariant of a degree-<=n polynomial viewed in ambient
/// degree n: for each multiplicity m, the number of distinct (complex) roots
/// with that multiplicity, plus the multiplicity of the root at infinity
/// (n - deg p). Invariant: sum of multiplicity * root_count plus
/// infinity_multiplicity equals n.
struct RootSignature {
  /// (multiplicity, number of distinct roots), ascending multiplicity.
  std::vector<std::pair<unsigned, unsigned>> entries;
  unsigned infinity_multiplicity = 0;
  unsigned ambient_degree = 0;

  /// All point multiplicities on the projective line (finite roots repeated
  /// per distinct root, plus infinity if present), sorted descending.
  std::vector<unsigned> projective_multiplicities() const;
  unsigned max_multiplicity() const;

  bool operator==(const RootSignature& o) const {
    return entries == o.entries &&
           infinity_multiplicity == o.infinity_multiplicity &&
           ambient_degree == o.ambient_degree;
  }
  bool operator!=(const RootSignature& o) const { return !(*this == o); }
};

/// Yun squarefree decomposition over characteristic zero:
/// p = lc * prod f_m^m with the f_m monic, squarefree, pairwise coprime.
/// Returns the (m, f_m) pairs with deg f_m > 0, ascending m.
std::vector<std::pair<unsigned, Polynomial>> squarefree_decomposition(
    const Polynomial& p);

/// Signature of p in ambient degree n. Pre: p != 0 and deg p <= n.
RootSignature squarefree_signature(const Polynomial& p, unsigned n);

}  // namespace x1

#endif
