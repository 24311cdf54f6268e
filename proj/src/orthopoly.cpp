#include "x1/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace x1 {

void JacobiParams::validate() const {
  if (alpha <= -1 || beta <= -1)
    throw std::invalid_argument("Jacobi: need alpha, beta > -1");
  if (alpha == beta) throw std::invalid_argument("Jacobi: need alpha != beta");
  if (alpha == 0 || beta == 0 || (alpha > 0) != (beta > 0))
    throw std::invalid_argument(
        "Jacobi: need sgn(alpha) = sgn(beta), both nonzero");
}

void LaguerreParams::validate() const {
  if (alpha <= 0) throw std::invalid_argument("Laguerre: need alpha > 0");
}

X1Params jacobi_param_map(const JacobiParams& jp) {
  jp.validate();
  const Rational a = (jp.beta - jp.alpha) / 2;
  const Rational b = (jp.beta + jp.alpha) / (jp.beta - jp.alpha);
  if (b * b == 1) throw std::invalid_argument("Jacobi: b^2 = 1 (k0 vanishes)");
  return X1Params::from_abk(a, b, b * b - 1, 2 * b, Rational(1));
}

X1Params laguerre_param_map(const LaguerreParams& lp) {
  lp.validate();
  return X1Params::from_abk(Rational(-1), -lp.alpha, lp.alpha, Rational(-1),
                            Rational(0));
}

X1Params family_param_map(const Family& fam) {
  if (std::holds_alternative<JacobiParams>(fam))
    return jacobi_param_map(std::get<JacobiParams>(fam));
  return laguerre_param_map(std::get<LaguerreParams>(fam));
}

Polynomial x1_jacobi(unsigned n, const JacobiParams& jp) {
  if (n < 1) throw std::invalid_argument("x1_jacobi: need n >= 1");
  const X1Params params = jacobi_param_map(jp);
  const EigenPair eig = x1_eigenpoly(n, params);
  const Rational target = (jp.alpha + Rational(n)) / (jp.beta - jp.alpha) *
                          binomial_rational(jp.alpha + Rational(n) - 2, n - 1);
  const Rational at1 = eig.P.evaluate(Rational(1));
  if (at1 == 0)
    throw std::domain_error(
        "x1_jacobi: P_n(1) = 0, normalization impossible for these "
        "parameters");
  return eig.P * (target / at1);
}

Polynomial x1_laguerre(unsigned n, const LaguerreParams& lp) {
  if (n < 1) throw std::invalid_argument("x1_laguerre: need n >= 1");
  const X1Params params = laguerre_param_map(lp);
  const EigenPair eig = x1_eigenpoly(n, params);
  // (x-b)^n-monic implies x^n-monic; rescale to (-1)^n / (n-1)!
  Rational lead = Rational(1) / Rational(factorial(n - 1));
  if (n % 2 == 1) lead = -lead;
  return eig.P * (lead / eig.P.leading());
}

Rational x1_family_eigenvalue(unsigned n, const Family& fam) {
  return x1_eigenvalue(n, family_param_map(fam));
}

Polynomial x1_family_polynomial(unsigned n, const Family& fam) {
  if (std::holds_alternative<JacobiParams>(fam))
    return x1_jacobi(n, std::get<JacobiParams>(fam));
  return x1_laguerre(n, std::get<LaguerreParams>(fam));
}

std::vector<Polynomial> x1_defining_sequence(const Family& fam,
                                             unsigned count) {
  const X1Params p = family_param_map(fam);
  std::vector<Polynomial> seq;
  seq.push_back(Polynomial::linear_root(p.c));
  const Polynomial u = Polynomial::linear_root(p.b);
  for (unsigned k = 2; k <= count; ++k) seq.push_back(u.pow(k));
  return seq;
}

namespace {

const QuadratureRule& family_rule(const Family& fam, unsigned order) {
  if (std::holds_alternative<JacobiParams>(fam)) {
    const auto& jp = std::get<JacobiParams>(fam);
    return QuadratureRule::gauss_jacobi(jp.alpha, jp.beta, order);
  }
  return QuadratureRule::gauss_laguerre(std::get<LaguerreParams>(fam).alpha,
                                        order);
}

Real pole_b_real(const Family& fam) {
  return to_real(family_param_map(fam).b);
}

}  // namespace

Quad inner_product(const Polynomial& P, const Polynomial& Q,
                   const Family& fam, unsigned order) {
  const Real b = pole_b_real(fam);
  auto f = [&](const Real& x) {
    const Real d = x - b;
    return P.evaluate_real(x) * Q.evaluate_real(x) / (d * d);
  };
  const Real lo = family_rule(fam, order).integrate(f);
  const Real hi = family_rule(fam, 2 * order).integrate(f);
  return Quad{hi, abs(hi - lo)};
}

Rational classical_norm_ratio_c0(unsigned n, const Family& fam) {
  if (std::holds_alternative<JacobiParams>(fam)) {
    const auto& jp = std::get<JacobiParams>(fam);
    const Rational ab = jp.alpha + jp.beta;
    Rational r = (ab + 1) / (ab + 2 * Rational(n) + 1);
    for (unsigned i = 1; i <= n; ++i) {
      r *= (jp.alpha + Rational(i)) * (jp.beta + Rational(i));
      r /= Rational(i) * (ab + Rational(i));
    }
    return r;
  }
  const auto& lp = std::get<LaguerreParams>(fam);
  Rational r = 1;
  for (unsigned i = 1; i <= n; ++i) r *= (lp.alpha + Rational(i)) / Rational(i);
  return r;
}

Real classical_norm_c0(const Family& fam) {
  if (std::holds_alternative<JacobiParams>(fam)) {
    const auto& jp = std::get<JacobiParams>(fam);
    const Rational ab = jp.alpha + jp.beta;
    return pow(Real(2), to_real(ab + 1)) * gamma_real(jp.alpha + 1) *
           gamma_real(jp.beta + 1) / gamma_real(ab + 2);
  }
  return gamma_real(std::get<LaguerreParams>(fam).alpha + 1);
}

NormValue norm_formula(unsigned n, const Family& fam) {
  if (n < 1) throw std::invalid_argument("norm_formula: need n >= 1");
  NormValue nv;
  if (std::holds_alternative<JacobiParams>(fam)) {
    const auto& jp = std::get<JacobiParams>(fam);
    const Rational an = jp.alpha + Rational(n), bn = jp.beta + Rational(n);
    nv.ratio_to_classical = an * bn / (4 * (an - 1) * (bn - 1));
  } else {
    const auto& lp = std::get<LaguerreParams>(fam);
    const Rational an = lp.alpha + Rational(n);
    nv.ratio_to_classical = an / (an - 1);
  }
  nv.classical_ratio_to_c0 = classical_norm_ratio_c0(n - 1, fam);
  nv.c0 = classical_norm_c0(fam);
  nv.value = to_real(nv.ratio_to_classical * nv.classical_ratio_to_c0) * nv.c0;
  return nv;
}

RealPoly RealPoly::from(const Polynomial& p) {
  RealPoly r;
  r.c.resize(p.degree() + 1);
  for (int j = 0; j <= p.degree(); ++j) r.c[j] = to_real(p.coeff(j));
  return r;
}

Real RealPoly::evaluate(const Real& x) const {
  Real r(0);
  for (size_t j = c.size(); j-- > 0;) r = r * x + c[j];
  return r;
}

RealPoly& RealPoly::axpy(const Real& s, const RealPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), Real(0));
  for (size_t j = 0; j < o.c.size(); ++j) c[j] += s * o.c[j];
  return *this;
}

RealPoly RealPoly::scaled(const Real& s) const {
  RealPoly r = *this;
  for (auto& v : r.c) v *= s;
  return r;
}

Real inner_product_real(const RealPoly& p, const RealPoly& q,
                        const Family& fam, unsigned order) {
  const Real b = pole_b_real(fam);
  const QuadratureRule& rule = family_rule(fam, order);
  return rule.integrate([&](const Real& x) {
    const Real d = x - b;
    return p.evaluate(x) * q.evaluate(x) / (d * d);
  });
}

std::vector<RealPoly> gram_schmidt_sequence(const std::vector<Polynomial>& seq,
                                            const Family& fam, unsigned count,
                                            unsigned order) {
  if (count > seq.size())
    throw std::invalid_argument("gram_schmidt: count exceeds sequence length");
  std::vector<RealPoly> u;
  std::vector<Real> norms;
  for (unsigned k = 0; k < count; ++k) {
    RealPoly v = RealPoly::from(seq[k]);
    for (int pass = 0; pass < 2; ++pass) {
      for (unsigned j = 0; j < k; ++j) {
        const Real coef = inner_product_real(v, u[j], fam, order) / norms[j];
        v.axpy(-coef, u[j]);
      }
    }
    const Real nn = inner_product_real(v, v, fam, order);
    if (nn <= 0)
      throw std::runtime_error("gram_schmidt: nonpositive norm (dependent or "
                               "ill-conditioned sequence)");
    for (unsigned j = 0; j < k; ++j) {
      const Real off = inner_product_real(v, u[j], fam, order);
      if (abs(off) > Real("1e-12") * sqrt(nn * norms[j]))
        throw std::runtime_error(
            "gram_schmidt: loss of orthogonality beyond tolerance");
    }
    u.push_back(std::move(v));
    norms.push_back(nn);
  }
  return u;
}

namespace {

struct FitResult {
  double slope = 0.0;
  double final_mag = 0.0;
  bool all_zero = true;
};

// least-squares slope of log|F| against log(eps)
FitResult fit_decay(const std::vector<Real>& eps,
                    const std::vector<Real>& vals) {
  FitResult fr;
  std::vector<double> t, v;
  for (size_t i = 0; i < eps.size(); ++i) {
    const double m = abs(vals[i]).convert_to<double>();
    if (i + 1 == eps.size()) fr.final_mag = m;
    if (m == 0.0) continue;
    fr.all_zero = false;
    t.push_back(std::log(eps[i].convert_to<double>()));
    v.push_back(std::log(m));
  }
  if (t.size() < 2) return fr;
  double tm = 0, vm = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    tm += t[i];
    vm += v[i];
  }
  tm /= t.size();
  vm /= t.size();
  double num = 0, den = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    num += (t[i] - tm) * (v[i] - vm);
    den += (t[i] - tm) * (t[i] - tm);
  }
  fr.slope = num / den;
  return fr;
}

EndpointCheck run_endpoint(const std::string& name, const Polynomial& y,
                           const Rational& c,
                           const std::function<Real(const Real&)>& envelope,
                           const std::function<Real(const Real&)>& point_of,
                           double predicted, bool fit_exponent) {
  const Polynomial dy = y.derivative();
  std::vector<Real> eps, vals;
  for (int k = 2; k <= 8; ++k) {
    const Real e = pow(Real(10), -k);
    const Real x = point_of(e);
    const Real f =
        y.evaluate_real(x) - (x - to_real(c)) * dy.evaluate_real(x);
    eps.push_back(e);
    vals.push_back(envelope(x) * f);
  }
  const FitResult fr = fit_decay(eps, vals);
  EndpointCheck ec;
  ec.endpoint = name;
  ec.predicted_exponent = predicted;
  ec.final_magnitude = fr.final_mag;
  ec.has_exponent_fit = fit_exponent && !fr.all_zero;
  ec.fitted_exponent = fr.slope;
  const bool mag_ok = fr.final_mag < 1e-12;
  const bool fit_ok =
      fit_exponent && !fr.all_zero && std::abs(fr.slope - predicted) <= 0.1;
  ec.pass = mag_ok || fit_ok || fr.all_zero;
  return ec;
}

}  // namespace

BoundaryReport check_boundary_conditions(const Polynomial& y,
                                         const Family& fam) {
  const X1Params params = family_param_map(fam);
  BoundaryReport rep;
  if (std::holds_alternative<JacobiParams>(fam)) {
    const auto& jp = std::get<JacobiParams>(fam);
    const Real ap1 = to_real(jp.alpha + 1), bp1 = to_real(jp.beta + 1);
    rep.endpoints.push_back(run_endpoint(
        "x->1-", y, params.c,
        [&](const Real& x) { return pow(Real(1) - x, ap1); },
        [](const Real& e) { return Real(1) - e; },
        (to_real(jp.alpha) + Real(1)).convert_to<double>(), true));
    rep.endpoints.push_back(run_endpoint(
        "x->-1+", y, params.c,
        [&](const Real& x) { return pow(Real(1) + x, bp1); },
        [](const Real& e) { return Real(-1) + e; },
        (to_real(jp.beta) + Real(1)).convert_to<double>(), true));
    return rep;
  }
  const auto& lp = std::get<LaguerreParams>(fam);
  const Real ap1 = to_real(lp.alpha + 1);
  rep.endpoints.push_back(run_endpoint(
      "x->0+", y, params.c,
      [&](const Real& x) { return pow(x, ap1) * exp(-x); },
      [](const Real& e) { return e; },
      (to_real(lp.alpha) + Real(1)).convert_to<double>(), true));
  rep.endpoints.push_back(run_endpoint(
      "x->inf", y, params.c,
      [&](const Real& x) { return pow(x, ap1) * exp(-x); },
      [](const Real& e) { return Real(1) / e; },  // x = 10^k
      0.0, false));
  return rep;
}

Polynomial classical_jacobi(unsigned n, const Rational& alpha,
                            const Rational& beta) {
  const Polynomial x = Polynomial::monomial(1);
  Polynomial p0 = Polynomial::constant(Rational(1));
  if (n == 0) return p0;
  Polynomial p1 = x * ((alpha + beta + 2) / 2) +
                  Polynomial::constant((alpha - beta) / 2);
  if (n == 1) return p1;
  for (unsigned m = 2; m <= n; ++m) {
    const Rational mm(m);
    const Rational ab = alpha + beta;
    const Rational c1 = 2 * mm * (mm + ab) * (2 * mm + ab - 2);
    const Rational c2 = (2 * mm + ab - 1) * (2 * mm + ab) * (2 * mm + ab - 2);
    const Rational c3 = (2 * mm + ab - 1) * (alpha * alpha - beta * beta);
    const Rational c4 =
        2 * (mm + alpha - 1) * (mm + beta - 1) * (2 * mm + ab);
    Polynomial pm = (x * c2 + Polynomial::constant(c3)) * p1 - p0 * c4;
    pm = pm / c1;
    p0 = std::move(p1);
    p1 = std::move(pm);
  }
  return p1;
}

Polynomial classical_laguerre(unsigned n, const Rational& alpha) {
  const Polynomial x = Polynomial::monomial(1);
  Polynomial p0 = Polynomial::constant(Rational(1));
  if (n == 0) return p0;
  Polynomial p1 = Polynomial::constant(alpha + 1) - x;
  if (n == 1) return p1;
  for (unsigned m = 2; m <= n; ++m) {
    const Rational mm(m);
    Polynomial pm =
        (Polynomial::constant(2 * mm - 1 + alpha) - x) * p1 -
        p0 * (mm - 1 + alpha);
    pm = pm / mm;
    p0 = std::move(p1);
    p1 = std::move(pm);
  }
  return p1;
}

}  // namespace x1
