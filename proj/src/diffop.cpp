#include "x1/diffop.hpp"

#include <map>
#include <stdexcept>

namespace x1 {

RationalFunction apply(const DiffOp2& T, const Polynomial& y) {
  const Polynomial dy = y.derivative();
  return T.p * RationalFunction(dy.derivative()) + T.q * RationalFunction(dy) +
         T.r * RationalFunction(y);
}

DiffOp2 transform_operator(const DiffOp2& T, const MobiusMap& g, unsigned n) {
  const Polynomial bot({g.delta(), g.gamma()});
  const RationalFunction pc = mobius_compose(T.p, g);
  const RationalFunction qc = mobius_compose(T.q, g);
  const RationalFunction rc = mobius_compose(T.r, g);
  const Rational nn(n);
  const Rational gam = g.gamma();

  RationalFunction ph = RationalFunction(bot.pow(4)) * pc;
  RationalFunction qh = RationalFunction(bot.pow(2)) * qc -
                        (Rational(2) * (nn - 1) * gam) *
                            (RationalFunction(bot.pow(3)) * pc);
  RationalFunction rh = rc - (nn * gam) * (RationalFunction(bot) * qc) +
                        (nn * (nn - 1) * gam * gam) *
                            (RationalFunction(bot.pow(2)) * pc);
  return DiffOp2(std::move(ph), std::move(qh), std::move(rh));
}

namespace {

// Laurent coefficients of f whose denominator is x^e: coefficient of x^m.
// Returns the range of exponents [lo, hi] and a lookup.
struct Laurent {
  int lo = 0;
  std::vector<Rational> c;  // c[i] = coeff of x^(lo + i)
  Rational at(int m) const {
    const int i = m - lo;
    if (i < 0 || i >= static_cast<int>(c.size())) return Rational(0);
    return c[i];
  }
  int hi() const { return lo + static_cast<int>(c.size()) - 1; }
};

Laurent laurent_of(const RationalFunction& f) {
  Laurent l;
  if (f.is_zero()) return l;
  const Polynomial& den = f.den();
  for (int j = 0; j < den.degree(); ++j)
    if (den.coeff(j) != 0)
      throw std::domain_error(
          "graded_components: pole at a point other than 0");
  const int e = den.degree();  // den = x^e (monic)
  l.lo = -e;
  l.c = f.num().coeffs();
  return l;
}

}  // namespace

std::vector<GradedComponent> graded_components(const DiffOp2& T) {
  const Laurent lp = laurent_of(T.p);
  const Laurent lq = laurent_of(T.q);
  const Laurent lr = laurent_of(T.r);

  std::map<int, GradedComponent> parts;
  auto touch = [&parts](int k) -> GradedComponent& {
    auto it = parts.find(k);
    if (it == parts.end()) {
      it = parts.emplace(k, GradedComponent{k, Rational(0), Rational(0),
                                            Rational(0)}).first;
    }
    return it->second;
  };
  if (!T.p.is_zero())
    for (int m = lp.lo; m <= lp.hi(); ++m)
      if (lp.at(m) != 0) touch(m - 2).a = lp.at(m);
  if (!T.q.is_zero())
    for (int m = lq.lo; m <= lq.hi(); ++m)
      if (lq.at(m) != 0) touch(m - 1).b = lq.at(m);
  if (!T.r.is_zero())
    for (int m = lr.lo; m <= lr.hi(); ++m)
      if (lr.at(m) != 0) touch(m).c = lr.at(m);

  std::vector<GradedComponent> out;
  out.reserve(parts.size());
  for (auto& [k, gc] : parts) out.push_back(std::move(gc));
  return out;
}

DiffOp2 diffop_from_graded(const std::vector<GradedComponent>& parts) {
  RationalFunction p, q, r;
  const Polynomial x = Polynomial::monomial(1);
  for (const GradedComponent& gc : parts) {
    // x^k contributes x^(k+2) to p, x^(k+1) to q, x^k to r
    auto mono = [&x](int e) -> RationalFunction {
      if (e >= 0)
        return RationalFunction(Polynomial::monomial(static_cast<unsigned>(e)));
      return RationalFunction(Polynomial::constant(Rational(1)),
                              Polynomial::monomial(static_cast<unsigned>(-e)));
    };
    if (gc.a != 0) p += mono(gc.k + 2) * gc.a;
    if (gc.b != 0) q += mono(gc.k + 1) * gc.b;
    if (gc.c != 0) r += mono(gc.k) * gc.c;
  }
  return DiffOp2(std::move(p), std::move(q), std::move(r));
}

bool preserves_pn(const DiffOp2& T, unsigned n) {
  for (unsigned j = 0; j <= n; ++j) {
    const RationalFunction img = apply(T, Polynomial::monomial(j));
    if (!img.is_polynomial()) return false;
    if (img.num().degree() > static_cast<int>(n)) return false;
  }
  return true;
}

bool preserves_subspace(const DiffOp2& T, const Subspace& M) {
  for (const Polynomial& v : M.basis()) {
    const RationalFunction img = apply(T, v);
    if (!img.is_polynomial()) return false;
    if (img.num().degree() > static_cast<int>(M.ambient_degree()))
      return false;
    if (!M.contains(img.num())) return false;
  }
  return true;
}

DiffOp2 commutator_first_order(const DiffOp2& A, const DiffOp2& B) {
  if (!A.p.is_zero() || !B.p.is_zero())
    throw std::invalid_argument("commutator: operators must be first order");
  const RationalFunction& a1 = A.q;
  const RationalFunction& a0 = A.r;
  const RationalFunction& b1 = B.q;
  const RationalFunction& b0 = B.r;
  return DiffOp2(RationalFunction(),
                 a1 * b1.derivative() - b1 * a1.derivative(),
                 a1 * b0.derivative() - b1 * a0.derivative());
}

}  // namespace x1
