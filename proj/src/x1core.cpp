#include "x1/x1core.hpp"

#include <stdexcept>

#include "x1/linalg.hpp"
#include "x1/roots.hpp"

namespace x1 {

X1Params X1Params::from_abk(const Rational& a, const Rational& b,
                            const Rational& k0, const Rational& k1,
                            const Rational& k2) {
  if (a == 0) throw std::invalid_argument("X1Params: a must be nonzero");
  X1Params p{a, b, b + 1 / a, k0, k1, k2};
  p.validate();
  return p;
}

void X1Params::validate() const {
  if (a * (c - b) != 1)
    throw std::invalid_argument("X1Params: a(c-b) = 1 violated");
  if (k0 == 0)
    throw std::invalid_argument("X1Params: k0 = p(b) must be nonzero");
}

DiffOp2 make_x1_operator(const X1Params& params) {
  params.validate();
  const Polynomial u = Polynomial::linear_root(params.b);   // x - b
  const Polynomial xc = Polynomial::linear_root(params.c);  // x - c
  const Polynomial p = u * u * params.k2 + u * params.k1 +
                       Polynomial::constant(params.k0);
  const Polynomial w = u * params.k1 + Polynomial::constant(2 * params.k0);
  return DiffOp2(RationalFunction(p),
                 RationalFunction(xc * w * params.a, u),
                 RationalFunction(w * -params.a, u));
}

Subspace x1_flag_basis(unsigned n, const Rational& a, const Rational& b) {
  if (n < 1) throw std::invalid_argument("x1_flag_basis: need n >= 1");
  const Polynomial u = Polynomial::linear_root(b);
  std::vector<Polynomial> basis;
  basis.push_back(u * a - Polynomial::constant(Rational(1)));
  for (unsigned k = 2; k <= n; ++k) basis.push_back(u.pow(k));
  return Subspace(n, std::move(basis));
}

Rational x1_eigenvalue(unsigned n, const X1Params& params) {
  return Rational(n - 1) * (Rational(n) * params.k2 + params.a * params.k1);
}

EigenPair x1_eigenpoly(unsigned n, const X1Params& params) {
  params.validate();
  if (n < 1) throw std::invalid_argument("x1_eigenpoly: need n >= 1");
  const Rational lambda_n = x1_eigenvalue(n, params);
  for (unsigned m = 1; m < n; ++m) {
    if (x1_eigenvalue(m, params) == lambda_n)
      throw std::domain_error("x1_eigenpoly: resonance lambda_" +
                              std::to_string(n) + " = lambda_" +
                              std::to_string(m));
  }

  const DiffOp2 T = make_x1_operator(params);
  const Subspace E = x1_flag_basis(n, params.a, params.b);
  const Polynomial shift({params.b, Rational(1)});  // t + b

  // matrix of T in the flag basis {a(x-b)-1, (x-b)^2, ..., (x-b)^n}: column
  // k = coordinates of T(e_k), read off the expansion in powers of (x-b)
  const size_t dim = n;
  QMatrix M(dim, dim);
  for (size_t k = 0; k < dim; ++k) {
    const RationalFunction img = apply(T, E.basis()[k]);
    const Polynomial in_u = img.as_polynomial().compose(shift);
    std::vector<Rational> coord(dim, Rational(0));
    coord[0] = in_u.coeff(1) / params.a;
    if (in_u.coeff(0) != -coord[0])
      throw std::logic_error("x1_eigenpoly: image left the flag");
    for (size_t j = 1; j < dim; ++j) coord[j] = in_u.coeff(j + 1);
    for (size_t i = 0; i < dim; ++i) M.at(i, k) = coord[i];
  }

  // (M - lambda_n) c = 0 with c_{n} = 1, solved by back-substitution; the
  // matrix is upper triangular with diagonal (lambda_1, ..., lambda_n)
  std::vector<Rational> c(dim, Rational(0));
  c[dim - 1] = 1;
  for (size_t i = dim - 1; i-- > 0;) {
    Rational s = 0;
    for (size_t j = i + 1; j < dim; ++j)
      if (c[j] != 0) s += M.at(i, j) * c[j];
    c[i] = s / (lambda_n - M.at(i, i));
  }

  Polynomial P;
  for (size_t k = 0; k < dim; ++k)
    if (c[k] != 0) P += E.basis()[k] * c[k];
  // normalize the coefficient of (x-b)^n to 1 (for n = 1 this lands on x - c)
  P = P / P.compose(shift).coeff(n);

  const RationalFunction check = apply(T, P);
  if (!(check - RationalFunction(P) * lambda_n).is_zero())
    throw std::logic_error("x1_eigenpoly: eigen relation failed");
  return EigenPair{n, std::move(P), lambda_n};
}

namespace {

// characteristic polynomial det(S - t I) by exact interpolation at
// t = 0, 1, ..., dim
Polynomial char_poly(const QMatrix& s) {
  const size_t d = s.rows;
  std::vector<Rational> xs, ys;
  for (size_t t = 0; t <= d; ++t) {
    QMatrix m = s;
    for (size_t i = 0; i < d; ++i) m.at(i, i) -= Rational(t);
    xs.push_back(Rational(t));
    ys.push_back(determinant(m));
  }
  // Lagrange interpolation
  Polynomial acc;
  for (size_t i = 0; i <= d; ++i) {
    Polynomial li = Polynomial::constant(Rational(1));
    Rational denom = 1;
    for (size_t j = 0; j <= d; ++j) {
      if (j == i) continue;
      li *= Polynomial::linear_root(xs[j]);
      denom *= xs[i] - xs[j];
    }
    acc += li * (ys[i] / denom);
  }
  return acc;
}

struct Pencil {
  QMatrix s;                           // (n+1)x(n+1): S v = lambda v
  std::vector<std::vector<Rational>> extra;  // rows R with R v = 0
};

// Reduce L v = lambda N v (N injective) to S v = lambda v plus linear
// constraints R v = 0 via RREF of [N | L].
Pencil reduce_pencil(const DiffOp2& T, unsigned n) {
  // common denominator s and cleared numerators
  Polynomial s = T.p.den();
  s = Polynomial::divmod(s * T.q.den(), gcd(s, T.q.den())).first;
  s = Polynomial::divmod(s * T.r.den(), gcd(s, T.r.den())).first;
  const Polynomial pt = T.p.num() * Polynomial::divmod(s, T.p.den()).first;
  const Polynomial qt = T.q.num() * Polynomial::divmod(s, T.q.den()).first;
  const Polynomial rt = T.r.num() * Polynomial::divmod(s, T.r.den()).first;

  int dmax = s.degree() + static_cast<int>(n);
  for (int j = 0; j <= static_cast<int>(n); ++j) {
    const int dl = std::max({pt.degree() + std::max(j - 2, 0),
                             qt.degree() + std::max(j - 1, 0),
                             rt.degree() + j});
    dmax = std::max(dmax, dl);
  }

  QMatrix combined(dmax + 1, 2 * (n + 1));
  for (unsigned j = 0; j <= n; ++j) {
    const Polynomial xj = Polynomial::monomial(j);
    const Polynomial nj = s * xj;
    const Polynomial lj =
        pt * xj.derivative().derivative() + qt * xj.derivative() + rt * xj;
    for (int t = 0; t <= dmax; ++t) {
      combined.at(t, j) = nj.coeff(t);
      combined.at(t, n + 1 + j) = lj.coeff(t);
    }
  }

  Pencil out;
  out.s = QMatrix(n + 1, n + 1);
  for (const auto& row : rref_rows(combined)) {
    bool lead_in_first = false;
    size_t pivot = 0;
    for (size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) {
        pivot = c;
        lead_in_first = (c <= n);
        break;
      }
    }
    if (lead_in_first) {
      // row = e_pivot in the N block, S entries in the L block
      for (unsigned j = 0; j <= n; ++j) out.s.at(pivot, j) = row[n + 1 + j];
    } else {
      out.extra.emplace_back(row.begin() + (n + 1), row.end());
    }
  }
  return out;
}

}  // namespace

std::vector<EigenSolution> polynomial_eigenfunctions(const DiffOp2& T,
                                                     unsigned n) {
  const Pencil pencil = reduce_pencil(T, n);
  const Polynomial cp = char_poly(pencil.s);
  std::vector<EigenSolution> out;
  if (cp.is_zero()) return out;  // cannot happen: det is degree n+1 in t

  // exact rational eigenvalue candidates
  std::vector<Rational> lambdas;
  for (const RootClass& rc : classified_roots(cp))
    if (rc.exact) lambdas.push_back(*rc.exact);

  for (const Rational& lambda : lambdas) {
    QMatrix sys(pencil.s.rows + pencil.extra.size(), n + 1);
    for (size_t i = 0; i <= n; ++i)
      for (size_t j = 0; j <= n; ++j)
        sys.at(i, j) = pencil.s.at(i, j) - (i == j ? lambda : Rational(0));
    for (size_t e = 0; e < pencil.extra.size(); ++e)
      for (size_t j = 0; j <= n; ++j)
        sys.at(n + 1 + e, j) = pencil.extra[e][j];
    for (const auto& v : nullspace(sys)) {
      if (v[n] == 0) continue;  // degree must be exactly n
      Polynomial P{std::vector<Rational>(v)};
      out.push_back(EigenSolution{lambda, P.monic()});
      break;  // one representative per eigenvalue
    }
  }
  return out;
}

BochnerReport verify_bochner_converse(const DiffOp2& T, unsigned nmax) {
  if (nmax < 5)
    throw std::invalid_argument(
        "verify_bochner_converse: need nmax >= 5 (classification theorem "
        "regime)");
  BochnerReport rep;
  rep.nmax = nmax;

  std::vector<std::vector<EigenSolution>> sols(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) {
    sols[n] = polynomial_eigenfunctions(T, n);
    if (!sols[n].empty()) rep.solvable_degrees.push_back(n);
  }
  const bool solvable0 = !sols[0].empty();
  bool all_positive = true;
  for (unsigned n = 1; n <= nmax; ++n)
    if (sols[n].empty()) all_positive = false;

  const bool bochner_shape =
      T.p.is_polynomial() && T.q.is_polynomial() && T.r.is_polynomial() &&
      T.p.num().degree() <= 2 && T.q.num().degree() <= 1 &&
      T.r.num().degree() <= 0;

  if (all_positive && solvable0) {
    if (bochner_shape) {
      rep.cls = BochnerClass::Classical;
      rep.detail = "polynomial eigenfunctions for every degree 0.." +
                   std::to_string(nmax) + "; Bochner shape";
    } else {
      rep.cls = BochnerClass::Neither;
      rep.detail =
          "solvable for all tested degrees including 0, but coefficients are "
          "not of Bochner shape";
    }
    return rep;
  }

  if (all_positive && !solvable0) {
    if (bochner_shape) {
      // cannot happen for a genuine Bochner operator; classify honestly
      rep.cls = BochnerClass::Neither;
      rep.detail = "Bochner-shaped operator without a constant eigenfunction";
      return rep;
    }
    // X1 recovery: c from the degree-1 eigenfunction, b from the pole of the
    // first-order coefficient, k_i from expanding p at b.
    if (!T.q.is_polynomial() && T.q.den().degree() == 1 &&
        T.p.is_polynomial() && T.p.num().degree() <= 2) {
      const Rational b = -T.q.den().coeff(0);
      const Polynomial pb = T.p.num().compose(Polynomial({b, Rational(1)}));
      const Rational k0 = pb.coeff(0), k1 = pb.coeff(1), k2 = pb.coeff(2);
      for (const EigenSolution& s1 : sols[1]) {
        const Rational c = -s1.P.coeff(0);  // monic x - c
        if (c == b || k0 == 0) continue;
        X1Params params{Rational(1) / (c - b), b, c, k0, k1, k2};
        const DiffOp2 ref = make_x1_operator(params);
        if (T.p != ref.p || T.q != ref.q) continue;
        const RationalFunction diff = T.r - ref.r;
        if (!diff.is_zero() &&
            (!diff.is_polynomial() || diff.num().degree() > 0))
          continue;
        rep.cls = BochnerClass::X1;
        rep.params = params;
        rep.additive_constant =
            diff.is_zero() ? Rational(0) : diff.num().coeff(0);
        rep.detail = "matches the X1 operator up to an additive constant";
        return rep;
      }
    }
    rep.cls = BochnerClass::Neither;
    rep.detail =
        "solvable for degrees 1.." + std::to_string(nmax) +
        " but not degree 0, yet the coefficients do not match the X1 form";
    return rep;
  }

  rep.cls = BochnerClass::Neither;
  rep.detail = "eigenproblem unsolvable at some positive degree";
  return rep;
}

}  // namespace x1
