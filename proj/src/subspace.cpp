#include "x1/subspace.hpp"

#include <stdexcept>

namespace x1 {

Subspace::Subspace(unsigned n, std::vector<Polynomial> basis)
    : n_(n), basis_(std::move(basis)) {
  for (const auto& p : basis_)
    if (p.degree() > static_cast<int>(n_))
      throw std::invalid_argument("basis polynomial exceeds ambient degree");
}

QMatrix Subspace::coefficient_matrix() const {
  QMatrix m(basis_.size(), n_ + 1);
  for (size_t i = 0; i < basis_.size(); ++i)
    for (unsigned j = 0; j <= n_; ++j) m.at(i, j) = basis_[i].coeff(j);
  return m;
}

unsigned Subspace::dimension() const {
  return static_cast<unsigned>(rank(coefficient_matrix()));
}

std::vector<Polynomial> Subspace::reduced_basis() const {
  std::vector<Polynomial> out;
  for (auto& row : rref_rows(coefficient_matrix()))
    out.emplace_back(std::move(row));
  return out;
}

bool Subspace::contains(const Polynomial& p) const {
  if (p.degree() > static_cast<int>(n_)) return false;
  if (p.is_zero()) return true;
  QMatrix m(basis_.size() + 1, n_ + 1);
  for (size_t i = 0; i < basis_.size(); ++i)
    for (unsigned j = 0; j <= n_; ++j) m.at(i, j) = basis_[i].coeff(j);
  for (unsigned j = 0; j <= n_; ++j) m.at(basis_.size(), j) = p.coeff(j);
  return rank(m) == dimension();
}

bool Subspace::same_span(const Subspace& other) const {
  if (n_ != other.n_) return false;
  return reduced_basis() == other.reduced_basis();
}

}  // namespace x1
