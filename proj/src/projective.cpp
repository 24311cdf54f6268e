#include "x1/projective.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace x1 {

Rational gamma_form(const Polynomial& p, const Polynomial& q, unsigned n) {
  if (p.degree() > static_cast<int>(n) || q.degree() > static_cast<int>(n))
    throw std::invalid_argument("gamma_form: degree exceeds ambient degree");
  Rational s = 0;
  for (unsigned j = 0; j <= n; ++j) {
    const Rational pj = p.coeff(j);
    if (pj == 0) continue;
    const Rational qk = q.coeff(n - j);
    if (qk == 0) continue;
    Rational term = pj * qk / Rational(binomial(n, j));
    s += (j % 2 == 0) ? term : -term;
  }
  return s;
}

Polynomial fundamental_covariant(const Subspace& M) {
  const unsigned n = M.ambient_degree();
  if (M.basis().size() != n)
    throw std::invalid_argument("fundamental_covariant: need n basis vectors");
  const QMatrix rows = M.coefficient_matrix();
  // cofactor expansion along the symbolic last row; the alternating signs of
  // that row cancel against the cofactor signs up to one global sign
  std::vector<Rational> coeffs(n + 1, Rational(0));
  QMatrix minor(n, n);
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned i = 0; i < n; ++i) {
      unsigned cc = 0;
      for (unsigned c = 0; c <= n; ++c) {
        if (c == j) continue;
        minor.at(i, cc++) = rows.at(i, c);
      }
    }
    coeffs[n - j] = Rational(binomial(n, j)) * determinant(minor);
  }
  Polynomial q(std::move(coeffs));
  if (q.is_zero())
    throw std::invalid_argument("fundamental_covariant: dependent basis");
  return q.monic();
}

Polynomial phi_annihilator(const Subspace& M) {
  const unsigned n = M.ambient_degree();
  if (M.basis().size() != n)
    throw std::invalid_argument("phi_annihilator: need n basis vectors");
  QMatrix a(n, n + 1);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k <= n; ++k) {
      const Rational v = M.basis()[i].coeff(n - k);
      if (v == 0) continue;
      Rational e = v / Rational(binomial(n, k));
      a.at(i, k) = ((n - k) % 2 == 0) ? e : -e;
    }
  }
  auto ns = nullspace(a);
  if (ns.size() != 1)
    throw std::invalid_argument(
        "phi_annihilator: solution space dimension != 1 (basis dependent?)");
  return Polynomial(std::move(ns[0])).monic();
}

std::vector<Polynomial> normalized_basis(const Subspace& M) {
  const unsigned n = M.ambient_degree();
  Polynomial q = fundamental_covariant(M);
  if (q.degree() == 0)
    throw std::domain_error(
        "normalized_basis: constant covariant (M = P_{n-1}) is outside the "
        "binomial window");
  const unsigned lambda = n - static_cast<unsigned>(q.degree());
  unsigned mu = 0;
  while (q.coeff(mu) == 0) ++mu;

  // Scale q to the eq-form with leading coefficient (-1)^lambda binom(n,l).
  Rational lead_target = Rational(binomial(n, lambda));
  if (lambda % 2 == 1) lead_target = -lead_target;
  const Polynomial qs = q * (lead_target / q.leading());

  std::vector<Polynomial> basis;
  for (unsigned j = 0; j < lambda; ++j)
    basis.push_back(Polynomial::monomial(j));
  for (unsigned j = lambda + 1; j + mu <= n; ++j) {
    Rational denom = Rational(binomial(n, j));
    if (j % 2 == 1) denom = -denom;
    const Rational beta = -qs.coeff(n - j) / denom;
    Polynomial b = Polynomial::monomial(j);
    if (beta != 0) b += Polynomial::monomial(lambda, beta);
    basis.push_back(std::move(b));
  }
  for (unsigned j = n - mu + 1; j <= n; ++j)
    basis.push_back(Polynomial::monomial(j));
  return basis;
}

namespace {

bool cplx_less(const Cplx& a, const Cplx& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

// ordering used for anchor selection; exactness preferred so witness maps
// stay rational whenever possible
bool point_less(const ProjPoint& a, const ProjPoint& b) {
  if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
  if (a.inf != b.inf) return a.inf;
  const bool ae = a.exact.has_value(), be = b.exact.has_value();
  if (ae != be) return ae;
  const bool ar = (a.numeric.im == 0), br = (b.numeric.im == 0);
  if (ar != br) return ar;
  return cplx_less(a.numeric, b.numeric);
}

struct CMat {
  Cplx a, b, c, d;  // zeta(x) = (a x + b) / (c x + d)
};

Cplx cfrom(const ProjPoint& p) { return p.numeric; }

// matrix sending (p1, p2, p3) -> (infinity, 0, 1)
CMat three_point_to_standard(const ProjPoint& p1, const ProjPoint& p2,
                             const ProjPoint& p3) {
  const Cplx one(Real(1), Real(0));
  if (p1.inf) {
    // z -> (z - p2) / (p3 - p2)
    return {one, -cfrom(p2), Cplx(), cfrom(p3) - cfrom(p2)};
  }
  if (p2.inf) {
    // z -> (p3 - p1) / (z - p1)
    return {Cplx(), cfrom(p3) - cfrom(p1), one, -cfrom(p1)};
  }
  if (p3.inf) {
    // z -> (z - p2) / (z - p1)
    return {one, -cfrom(p2), one, -cfrom(p1)};
  }
  const Cplx z1 = cfrom(p1), z2 = cfrom(p2), z3 = cfrom(p3);
  return {z3 - z1, -z2 * (z3 - z1), z3 - z2, -z1 * (z3 - z2)};
}

std::optional<Cplx> capply(const CMat& m, const ProjPoint& p) {
  if (p.inf) {
    if (m.c.abs2() == 0) return std::nullopt;  // maps to infinity
    return m.a / m.c;
  }
  const Cplx den = m.c * cfrom(p) + m.d;
  const Cplx num = m.a * cfrom(p) + m.b;
  if (negligible(den.abs(), num.abs())) return std::nullopt;
  return num / den;
}

// exact rational matrix for three exact points (pre: every p_i.inf or exact)
MobiusMap three_point_to_standard_exact(const ProjPoint& p1,
                                        const ProjPoint& p2,
                                        const ProjPoint& p3) {
  const Rational one(1);
  if (p1.inf)
    return MobiusMap(one, -*p2.exact, Rational(0), *p3.exact - *p2.exact);
  if (p2.inf)
    return MobiusMap(Rational(0), *p3.exact - *p1.exact, one, -*p1.exact);
  if (p3.inf) return MobiusMap(one, -*p2.exact, one, -*p1.exact);
  const Rational z1 = *p1.exact, z2 = *p2.exact, z3 = *p3.exact;
  return MobiusMap(z3 - z1, -z2 * (z3 - z1), z3 - z2, -z1 * (z3 - z2));
}

}  // namespace

std::vector<ProjPoint> covariant_points(const Polynomial& q, unsigned n) {
  std::vector<ProjPoint> pts;
  for (const RootClass& rc : classified_roots(q)) {
    ProjPoint p;
    p.inf = false;
    p.numeric = rc.numeric;
    p.exact = rc.exact;
    p.multiplicity = rc.multiplicity;
    pts.push_back(std::move(p));
  }
  const unsigned inf_mult = n - static_cast<unsigned>(q.degree());
  if (inf_mult > 0) {
    ProjPoint p;
    p.inf = true;
    p.multiplicity = inf_mult;
    pts.push_back(std::move(p));
  }
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

NormalForm normal_form(const Polynomial& q, unsigned n) {
  NormalForm nf;
  nf.signature = squarefree_signature(q, n);
  std::vector<ProjPoint> pts = covariant_points(q, n);
  if (pts.empty()) return nf;  // cannot happen: at least infinity or a root
  nf.normalized_infinity_multiplicity = pts[0].multiplicity;
  if (pts.size() == 1) return nf;

  if (pts.size() == 2) {
    nf.normalized_roots.emplace_back(Cplx(Real(0), Real(0)),
                                     pts[1].multiplicity);
    return nf;
  }

  const CMat t = three_point_to_standard(pts[0], pts[1], pts[2]);
  nf.normalized_roots.emplace_back(Cplx(Real(0), Real(0)),
                                   pts[1].multiplicity);
  nf.normalized_roots.emplace_back(Cplx(Real(1), Real(0)),
                                   pts[2].multiplicity);
  for (size_t i = 3; i < pts.size(); ++i) {
    auto img = capply(t, pts[i]);
    if (!img)
      throw std::runtime_error("normal_form: anchor map sent a root to "
                               "infinity; root separation failed");
    nf.normalized_roots.emplace_back(*img, pts[i].multiplicity);
  }
  std::sort(nf.normalized_roots.begin(), nf.normalized_roots.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return cplx_less(a.first, b.first);
            });
  return nf;
}

namespace {

bool exact_triple(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  auto ok = [](const ProjPoint& p) { return p.inf || p.exact.has_value(); };
  return ok(a) && ok(b) && ok(c);
}

// exact span verification: g carries M1 onto M2
bool verify_witness(const MobiusMap& g, const Subspace& M1,
                    const Subspace& M2) {
  const unsigned n = M1.ambient_degree();
  std::vector<Polynomial> mapped;
  mapped.reserve(M1.basis().size());
  for (const Polynomial& v : M1.basis()) mapped.push_back(mobius_act(v, g, n));
  return Subspace(n, std::move(mapped)).same_span(M2);
}

// numeric plausibility: zeta_g maps each point of q2 onto a point of q1 of
// equal multiplicity
bool numeric_match(const CMat& g, const std::vector<ProjPoint>& pts1,
                   const std::vector<ProjPoint>& pts2) {
  std::vector<bool> used(pts1.size(), false);
  for (const ProjPoint& w : pts2) {
    auto img = capply(g, w);
    bool found = false;
    for (size_t i = 0; i < pts1.size(); ++i) {
      if (used[i] || pts1[i].multiplicity != w.multiplicity) continue;
      if (!img) {
        if (pts1[i].inf) {
          used[i] = found = true;
          break;
        }
        continue;
      }
      if (pts1[i].inf) continue;
      const Cplx diff = *img - pts1[i].numeric;
      if (negligible(diff.abs(), pts1[i].numeric.abs() + Real(1))) {
        used[i] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<MobiusMap> rationalize(const CMat& m) {
  // scale by the entry of largest modulus, then reconstruct entry by entry
  const Cplx* entries[4] = {&m.a, &m.b, &m.c, &m.d};
  const Cplx* best = entries[0];
  for (const Cplx* e : entries)
    if (e->abs2() > best->abs2()) best = e;
  if (best->abs2() == 0) return std::nullopt;
  Rational vals[4];
  for (int i = 0; i < 4; ++i) {
    const Cplx scaled = *entries[i] / *best;
    if (!negligible(scaled.im, scaled.re)) return std::nullopt;
    auto r = reconstruct_rational(scaled.re);
    if (!r) return std::nullopt;
    vals[i] = *r;
  }
  if (vals[0] * vals[3] - vals[1] * vals[2] == 0) return std::nullopt;
  return MobiusMap(vals[0], vals[1], vals[2], vals[3]);
}

}  // namespace

EquivalenceResult subspace_equivalent(const Subspace& M1, const Subspace& M2) {
  if (M1.ambient_degree() != M2.ambient_degree())
    throw std::invalid_argument("subspace_equivalent: ambient degrees differ");
  const unsigned n = M1.ambient_degree();
  EquivalenceResult res;

  if (M1.same_span(M2)) {
    res.status = EquivalenceStatus::Equivalent;
    res.witness = MobiusMap::identity();
    res.detail = "identical subspaces";
    return res;
  }

  const Polynomial q1 = fundamental_covariant(M1);
  const Polynomial q2 = fundamental_covariant(M2);
  const RootSignature s1 = squarefree_signature(q1, n);
  const RootSignature s2 = squarefree_signature(q2, n);
  if (s1.projective_multiplicities() != s2.projective_multiplicities()) {
    res.status = EquivalenceStatus::NotEquivalent;
    res.detail = "signature mismatch";
    return res;
  }

  std::vector<ProjPoint> pts1 = covariant_points(q1, n);
  std::vector<ProjPoint> pts2 = covariant_points(q2, n);

  // One projective point: the covariant (hence the subspace) is determined by
  // it, so a map matching the points is a witness.
  auto single_point_map = [](const ProjPoint& z,
                             const ProjPoint& w) -> MobiusMap {
    // need zeta(w) = z
    if (z.inf && w.inf) return MobiusMap::identity();
    if (!z.inf && !w.inf)
      return MobiusMap::translation(*z.exact - *w.exact);
    if (z.inf)  // zeta(w finite) = infinity
      return MobiusMap(Rational(0), Rational(1), Rational(1), -*w.exact);
    // zeta(infinity) = z finite
    return MobiusMap(*z.exact, Rational(1), Rational(1), Rational(0));
  };

  bool plausible_unverified = false;

  if (pts1.size() == 1) {
    const bool exact_ok = (pts1[0].inf || pts1[0].exact.has_value()) &&
                          (pts2[0].inf || pts2[0].exact.has_value());
    if (exact_ok) {
      MobiusMap g = single_point_map(pts1[0], pts2[0]);
      if (verify_witness(g, M1, M2)) {
        res.status = EquivalenceStatus::Equivalent;
        res.witness = g;
        return res;
      }
    }
    res.status = EquivalenceStatus::Inconclusive;
    res.detail = "single-point covariants; exact anchor unavailable";
    return res;
  }

  // Enumerate ordered anchor assignments. The first anchor triple of q1 is
  // fixed; all multiplicity-matching triples of q2 points are tried. For two
  // distinct points a free third pair completes the map (any completion
  // works: matching the two classes already forces proportional covariants).
  std::vector<std::array<size_t, 3>> targets;
  const size_t m2count = pts2.size();
  if (pts1.size() == 2) {
    for (size_t i = 0; i < m2count; ++i)
      for (size_t j = 0; j < m2count; ++j) {
        if (i == j) continue;
        if (pts2[i].multiplicity != pts1[0].multiplicity) continue;
        if (pts2[j].multiplicity != pts1[1].multiplicity) continue;
        targets.push_back({i, j, SIZE_MAX});
      }
  } else {
    for (size_t i = 0; i < m2count; ++i)
      for (size_t j = 0; j < m2count; ++j)
        for (size_t k = 0; k < m2count; ++k) {
          if (i == j || j == k || i == k) continue;
          if (pts2[i].multiplicity != pts1[0].multiplicity) continue;
          if (pts2[j].multiplicity != pts1[1].multiplicity) continue;
          if (pts2[k].multiplicity != pts1[2].multiplicity) continue;
          targets.push_back({i, j, k});
        }
  }

  // free completion point for the two-point case: a rational point outside
  // both point sets
  auto free_point = [](const std::vector<ProjPoint>& a,
                       const std::vector<ProjPoint>& b) -> ProjPoint {
    for (int cand = 0;; ++cand) {
      const Rational c(cand);
      auto hits = [&](const std::vector<ProjPoint>& v) {
        for (const auto& p : v) {
          if (p.inf) continue;
          if (p.exact && *p.exact == c) return true;
          if (!p.exact &&
              negligible((p.numeric - Cplx(to_real(c), Real(0))).abs(),
                         p.numeric.abs()))
            return true;
        }
        return false;
      };
      if (!hits(a) && !hits(b)) {
        ProjPoint p;
        p.inf = false;
        p.exact = c;
        p.numeric = Cplx(to_real(c), Real(0));
        return p;
      }
    }
  };

  for (const auto& t : targets) {
    ProjPoint z3, w3;
    const bool two_points = (t[2] == SIZE_MAX);
    if (two_points) {
      // any completion pair works; pick one rational point for both sides
      z3 = free_point(pts1, pts2);
      w3 = z3;
    } else {
      z3 = pts1[2];
      w3 = pts2[t[2]];
    }
    const ProjPoint& w1 = pts2[t[0]];
    const ProjPoint& w2 = pts2[t[1]];

    if (exact_triple(pts1[0], pts1[1], z3) && exact_triple(w1, w2, w3)) {
      const MobiusMap tz =
          three_point_to_standard_exact(pts1[0], pts1[1], z3);
      const MobiusMap tw = three_point_to_standard_exact(w1, w2, w3);
      const MobiusMap g = tz.inverse() * tw;
      if (verify_witness(g, M1, M2)) {
        res.status = EquivalenceStatus::Equivalent;
        res.witness = g;
        return res;
      }
      continue;
    }

    // numeric candidate, then rational reconstruction
    const CMat tzc = three_point_to_standard(pts1[0], pts1[1], z3);
    const CMat twc = three_point_to_standard(w1, w2, w3);
    // g = tz^{-1} * tw, with tz^{-1} the adjugate (projective scale ignored)
    const CMat tzinv{tzc.d, -tzc.b, -tzc.c, tzc.a};
    const CMat gc{tzinv.a * twc.a + tzinv.b * twc.c,
                  tzinv.a * twc.b + tzinv.b * twc.d,
                  tzinv.c * twc.a + tzinv.d * twc.c,
                  tzinv.c * twc.b + tzinv.d * twc.d};
    if (!numeric_match(gc, pts1, pts2)) continue;
    if (auto g = rationalize(gc)) {
      if (verify_witness(*g, M1, M2)) {
        res.status = EquivalenceStatus::Equivalent;
        res.witness = *g;
        return res;
      }
    }
    plausible_unverified = true;
  }

  if (plausible_unverified) {
    res.status = EquivalenceStatus::Inconclusive;
    res.detail =
        "a candidate matched the root data numerically but no exact rational "
        "witness verified";
  } else {
    res.status = EquivalenceStatus::NotEquivalent;
    res.detail = "no candidate assignment matched";
  }
  return res;
}

}  // namespace x1
