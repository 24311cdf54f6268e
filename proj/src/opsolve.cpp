#include "x1/opsolve.hpp"

#include <stdexcept>

#include "x1/projective.hpp"

namespace x1 {

OperatorSpace preserving_operators(const Subspace& M,
                                   const Polynomial& denominator,
                                   unsigned numerator_degree_bound) {
  if (denominator.is_zero())
    throw std::invalid_argument("preserving_operators: zero denominator");
  const unsigned n = M.ambient_degree();
  const unsigned B = numerator_degree_bound;
  const std::vector<Polynomial>& vs = M.basis();
  const size_t m = vs.size();
  const unsigned dd = static_cast<unsigned>(denominator.degree());
  const unsigned dmax = std::max(B + n, dd + n);

  // Functionals vanishing on d*M inside P_dmax: nullspace of the coefficient
  // matrix of the d*v_i.
  QMatrix g(m, dmax + 1);
  for (size_t i = 0; i < m; ++i) {
    const Polynomial dv = denominator * vs[i];
    for (unsigned j = 0; j <= dmax; ++j) g.at(i, j) = dv.coeff(j);
  }
  const auto functionals = nullspace(g);

  // Constraint matrix over the 3(B+1) ansatz coefficients: for every basis
  // vector v and functional phi, phi applied to ptilde v'' + qtilde v' +
  // rtilde v must vanish. Row order fixed: basis vector outer, functional
  // inner.
  const size_t ncols = 3 * (B + 1);
  QMatrix a(m * functionals.size(), ncols);
  size_t row = 0;
  for (size_t i = 0; i < m; ++i) {
    const Polynomial d2 = vs[i].derivative().derivative();
    const Polynomial d1 = vs[i].derivative();
    const Polynomial& d0 = vs[i];
    for (const auto& phi : functionals) {
      for (unsigned j = 0; j <= B; ++j) {
        Rational sp = 0, sq = 0, sr = 0;
        for (int t = 0; t <= d2.degree(); ++t)
          if (t + j <= dmax) sp += d2.coeff(t) * phi[t + j];
        for (int t = 0; t <= d1.degree(); ++t)
          if (t + j <= dmax) sq += d1.coeff(t) * phi[t + j];
        for (int t = 0; t <= d0.degree(); ++t)
          if (t + j <= dmax) sr += d0.coeff(t) * phi[t + j];
        a.at(row, j) = sp;
        a.at(row, B + 1 + j) = sq;
        a.at(row, 2 * (B + 1) + j) = sr;
      }
      ++row;
    }
  }

  OperatorSpace out;
  out.n = n;
  for (const auto& sol : nullspace(a)) {
    std::vector<Rational> pc(sol.begin(), sol.begin() + (B + 1));
    std::vector<Rational> qc(sol.begin() + (B + 1), sol.begin() + 2 * (B + 1));
    std::vector<Rational> rc(sol.begin() + 2 * (B + 1), sol.end());
    out.basis.emplace_back(
        RationalFunction(Polynomial(std::move(pc)), denominator),
        RationalFunction(Polynomial(std::move(qc)), denominator),
        RationalFunction(Polynomial(std::move(rc)), denominator));
  }
  return out;
}

namespace {
Polynomial xpow(unsigned k) { return Polynomial::monomial(k); }
}  // namespace

DiffOp2 sl2_lowering(unsigned) {
  return DiffOp2(RationalFunction(), RationalFunction(Polynomial::constant(1)),
                 RationalFunction());
}

DiffOp2 sl2_neutral(unsigned n) {
  return DiffOp2(RationalFunction(), RationalFunction(xpow(1)),
                 RationalFunction(Polynomial::constant(Rational(n) / -2)));
}

DiffOp2 sl2_raising(unsigned n) {
  return DiffOp2(RationalFunction(), RationalFunction(xpow(2)),
                 RationalFunction(xpow(1) * Rational(-static_cast<int>(n))));
}

OperatorSpace lie_basis(unsigned n) {
  if (n < 2) throw std::invalid_argument("lie_basis: need n >= 2");
  const Rational nn(n);
  OperatorSpace out;
  out.n = n;
  auto add = [&out](Polynomial p, Polynomial q, Polynomial r) {
    out.basis.emplace_back(RationalFunction(std::move(p)),
                           RationalFunction(std::move(q)),
                           RationalFunction(std::move(r)));
  };
  add(xpow(4), xpow(3) * (Rational(-2) * (nn - 1)), xpow(2) * (nn * (nn - 1)));
  add(xpow(3), xpow(2) * (Rational(-2) * (nn - 1)), xpow(1) * (nn * (nn - 1)));
  add(xpow(2), Polynomial(), Polynomial());
  add(xpow(1), Polynomial(), Polynomial());
  add(Polynomial::constant(1), Polynomial(), Polynomial());
  add(Polynomial(), xpow(2), xpow(1) * -nn);
  add(Polynomial(), xpow(1), Polynomial());
  add(Polynomial(), Polynomial::constant(1), Polynomial());
  add(Polynomial(), Polynomial(), Polynomial::constant(1));
  return out;
}

OperatorSpace j_basis(unsigned n, const Rational& a, const Rational& b) {
  if (n < 2) throw std::invalid_argument("j_basis: need n >= 2");
  const Rational nn(n);
  const Polynomial u = Polynomial::linear_root(b);        // x - b
  const Polynomial au1 = u * a - Polynomial::constant(1);  // a(x-b) - 1
  OperatorSpace out;
  out.n = n;
  auto add = [&out](RationalFunction p, RationalFunction q,
                    RationalFunction r) {
    out.basis.emplace_back(std::move(p), std::move(q), std::move(r));
  };
  // J1
  add(RationalFunction(u.pow(4)),
      RationalFunction(u.pow(3) * (Rational(-2) * (nn - 1))),
      RationalFunction(u.pow(2) * (nn * (nn - 1))));
  // J2
  add(RationalFunction(u.pow(3)), RationalFunction(u.pow(2) * -(nn - 1)),
      RationalFunction());
  // J3
  add(RationalFunction(u.pow(2)), RationalFunction(), RationalFunction());
  // J4
  add(RationalFunction(u), RationalFunction(au1), RationalFunction());
  // J5 = D_xx + 2(a - 1/(x-b)) D_x - 2a/(x-b)
  add(RationalFunction(Polynomial::constant(1)),
      RationalFunction(Rational(2) * au1, u),
      RationalFunction(Polynomial::constant(Rational(-2) * a), u));
  // J6
  add(RationalFunction(), RationalFunction(u * (u * a - Polynomial::constant(nn))),
      RationalFunction(u * (-a * nn)));
  // J7
  add(RationalFunction(), RationalFunction(),
      RationalFunction(Polynomial::constant(1)));
  return out;
}

ExceptionalReport is_exceptional(const Subspace& M,
                                 const ExceptionalOptions& opt) {
  const unsigned n = M.ambient_degree();
  if (!M.is_codimension_one())
    throw std::invalid_argument("is_exceptional: need codimension one");
  const Polynomial q = fundamental_covariant(M);

  ExceptionalReport rep;
  const bool trivially = (q.degree() == 0);
  rep.ansatz_denominator =
      trivially ? Polynomial::constant(Rational(1)) : q * q;
  rep.ansatz_bound =
      n + static_cast<unsigned>(rep.ansatz_denominator.degree()) + 2;

  OperatorSpace space =
      preserving_operators(M, rep.ansatz_denominator, rep.ansatz_bound);
  rep.solver_dimension = space.dimension();
  if (opt.saturation_check) {
    OperatorSpace bigger =
        preserving_operators(M, rep.ansatz_denominator, 2 * rep.ansatz_bound);
    rep.saturated = (bigger.dimension() == space.dimension());
    if (!rep.saturated) {
      space = std::move(bigger);
      rep.solver_dimension = space.dimension();
    }
  }

  for (const DiffOp2& T : space.basis) {
    if (!preserves_pn(T, n)) {
      rep.witness = T;
      break;
    }
  }
  if (trivially)
    rep.cls = ExceptionalClass::TriviallyExceptionalPn1;
  else
    rep.cls = rep.witness ? ExceptionalClass::Exceptional
                          : ExceptionalClass::NotExceptional;
  return rep;
}

}  // namespace x1
