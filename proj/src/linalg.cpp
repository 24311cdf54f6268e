#include "x1/linalg.hpp"

#include <stdexcept>

namespace x1 {

namespace {

struct IntEchelon {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;
  std::vector<size_t> pivot_cols;  // pivot c of row i is pivot_cols[i]
  int sign = 1;
  Int& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

// Clear denominators row by row (does not change rank or nullspace); the
// per-row scale factors are returned for determinant use.
IntEchelon to_integer(const QMatrix& m, std::vector<Int>* scales = nullptr) {
  IntEchelon e;
  e.rows = m.rows;
  e.cols = m.cols;
  e.a.resize(m.rows * m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    Int l = 1;
    for (size_t j = 0; j < m.cols; ++j)
      l = lcm(l, Int(denominator(m.at(i, j))));
    for (size_t j = 0; j < m.cols; ++j) {
      const Rational v = m.at(i, j) * Rational(l);
      e.at(i, j) = numerator(v);
    }
    if (scales) scales->push_back(l);
  }
  return e;
}

// Fraction-free Gaussian elimination (Bareiss). Deterministic pivoting:
// leftmost pivot column, topmost nonzero row.
void bareiss(IntEchelon& e) {
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < e.cols && r < e.rows; ++c) {
    size_t pr = r;
    while (pr < e.rows && e.at(pr, c) == 0) ++pr;
    if (pr == e.rows) continue;
    if (pr != r) {
      for (size_t j = 0; j < e.cols; ++j) std::swap(e.at(r, j), e.at(pr, j));
      e.sign = -e.sign;
    }
    const Int p = e.at(r, c);
    for (size_t i = r + 1; i < e.rows; ++i) {
      const Int f = e.at(i, c);
      for (size_t j = c + 1; j < e.cols; ++j)
        e.at(i, j) = (p * e.at(i, j) - f * e.at(r, j)) / prev;
      e.at(i, c) = 0;
    }
    prev = p;
    e.pivot_cols.push_back(c);
    ++r;
  }
}

}  // namespace

size_t rank(const QMatrix& m) {
  IntEchelon e = to_integer(m);
  bareiss(e);
  return e.pivot_cols.size();
}

Rational determinant(const QMatrix& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: not square");
  if (m.rows == 0) return Rational(1);
  std::vector<Int> scales;
  IntEchelon e = to_integer(m, &scales);
  bareiss(e);
  if (e.pivot_cols.size() < m.rows) return Rational(0);
  Rational d(e.at(m.rows - 1, m.cols - 1) * e.sign);
  for (const Int& s : scales) d /= Rational(s);
  return d;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
  IntEchelon e = to_integer(m);
  bareiss(e);
  const size_t nr = e.pivot_cols.size();
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols, Rational(0));
    x[f] = 1;
    for (size_t i = nr; i-- > 0;) {
      const size_t pc = e.pivot_cols[i];
      if (pc > f) continue;  // columns right of f are later pivots or zero
      Rational s = 0;
      for (size_t j = pc + 1; j < m.cols; ++j)
        if (x[j] != 0) s += Rational(e.at(i, j)) * x[j];
      x[pc] = -s / Rational(e.at(i, pc));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<Rational>> rref_rows(QMatrix m) {
  size_t r = 0;
  std::vector<size_t> pivots;
  for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
    size_t pr = r;
    while (pr < m.rows && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows) continue;
    if (pr != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const Rational p = m.at(r, c);
    for (size_t j = c; j < m.cols; ++j) m.at(r, j) /= p;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c);
      for (size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 0; i < r; ++i)
    rows.emplace_back(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols);
  return rows;
}

}  // namespace x1
