#ifndef X1_LINALG_HPP
#define X1_LINALG_HPP

#include <vector>

#include "x1/numbers.hpp"

namespace x1 {

/// Dense row-major matrix over Rational.
struct QMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Rank via fraction-free (Bareiss) elimination. Pivoting is deterministic:
/// leftmost column, topmost nonzero row.
size_t rank(const QMatrix& m);

/// Exact determinant of a square matrix.
Rational determinant(const QMatrix& m);

/// Canonical basis of the right nullspace {x : M x = 0}. One basis vector per
/// free column, ordered by free column index, with a 1 in that coordinate.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

/// Reduced row echelon form (unit pivots, zeros above and below); returns the
/// nonzero rows. Canonical for the row space, so two spans are equal iff
/// their canonical rows are identical.
std::vector<std::vector<Rational>> rref_rows(QMatrix m);

}  // namespace x1

#endif
