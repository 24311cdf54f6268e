#include "x1/squarefree.hpp"

#include <algorithm>
#include <stdexcept>

namespace x1 {

std::vector<unsigned> RootSignature::projective_multiplicities() const {
  std::vector<unsigned> m;
  for (const auto& [mult, count] : entries)
    for (unsigned i = 0; i < count; ++i) m.push_back(mult);
  if (infinity_multiplicity > 0) m.push_back(infinity_multiplicity);
  std::sort(m.begin(), m.end(), std::greater<unsigned>());
  return m;
}

unsigned RootSignature::max_multiplicity() const {
  unsigned mx = infinity_multiplicity;
  for (const auto& [mult, count] : entries) mx = std::max(mx, mult);
  return mx;
}

std::vector<std::pair<unsigned, Polynomial>> squarefree_decomposition(
    const Polynomial& p) {
  if (p.is_zero())
    throw std::domain_error("squarefree decomposition of zero polynomial");
  std::vector<std::pair<unsigned, Polynomial>> out;
  if (p.degree() == 0) return out;

  // Yun's algorithm.
  Polynomial d = p.derivative();
  Polynomial g = gcd(p, d);
  Polynomial w = Polynomial::divmod(p, g).first;   // product of distinct roots
  Polynomial y = Polynomial::divmod(d, g).first;
  Polynomial z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    Polynomial fi = gcd(w, z);
    if (fi.degree() > 0) out.emplace_back(i, fi.monic());
    w = Polynomial::divmod(w, fi).first;
    y = Polynomial::divmod(z, fi).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

RootSignature squarefree_signature(const Polynomial& p, unsigned n) {
  if (p.is_zero()) throw std::domain_error("signature of zero polynomial");
  if (p.degree() > static_cast<int>(n))
    throw std::invalid_argument("degree exceeds ambient degree");
  RootSignature sig;
  sig.ambient_degree = n;
  sig.infinity_multiplicity = n - static_cast<unsigned>(p.degree());
  for (const auto& [m, f] : squarefree_decomposition(p))
    sig.entries.emplace_back(m, static_cast<unsigned>(f.degree()));
  return sig;
}

}  // namespace x1
