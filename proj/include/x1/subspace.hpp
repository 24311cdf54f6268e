#ifndef X1_SUBSPACE_HPP
#define X1_SUBSPACE_HPP

#include <vector>

#include "x1/linalg.hpp"
#include "x1/polynomial.hpp"

namespace x1 {

/// A polynomial subspace of P_n, stored as an explicit basis. Most of the
/// projective machinery requires codimension one (dimension n).
class Subspace {
 public:
  Subspace(unsigned n, std::vector<Polynomial> basis);

  unsigned ambient_degree() const { return n_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  unsigned dimension() const;
  bool is_codimension_one() const { return dimension() == n_; }

  /// Rows = basis coefficient vectors, length n+1.
  QMatrix coefficient_matrix() const;

  /// Canonical RREF basis; equal spans give identical output.
  std::vector<Polynomial> reduced_basis() const;

  bool contains(const Polynomial& p) const;
  bool same_span(const Subspace& other) const;

 private:
  unsigned n_;
  std::vector<Polynomial> basis_;
};

}  // namespace x1

#endif
