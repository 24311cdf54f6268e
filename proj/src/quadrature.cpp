#include "x1/quadrature.hpp"

#include <Eigen/Dense>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace x1 {

Real gamma_real(const Rational& q) { return tgamma(to_real(q)); }

namespace {

// Monic three-term recurrence pi_{k+1} = (x - a_k) pi_k - b_k pi_{k-1},
// b_0 = integral of the weight. Gautschi's coefficients.
void jacobi_recurrence(const Rational& alpha, const Rational& beta, unsigned n,
                       std::vector<Real>* a, std::vector<Real>* b) {
  const Rational ab = alpha + beta;
  for (unsigned k = 0; k < n; ++k) {
    if (k == 0)
      a->push_back(to_real((beta - alpha) / (ab + 2)));
    else {
      const Rational tk = Rational(2 * k) + ab;
      a->push_back(to_real((beta * beta - alpha * alpha) / (tk * (tk + 2))));
    }
    if (k == 0) {
      const Real mu0 = pow(Real(2), to_real(ab + 1)) * gamma_real(alpha + 1) *
                       gamma_real(beta + 1) / gamma_real(ab + 2);
      b->push_back(mu0);
    } else if (k == 1) {
      b->push_back(to_real(Rational(4) * (alpha + 1) * (beta + 1) /
                           ((ab + 2) * (ab + 2) * (ab + 3))));
    } else {
      const Rational kk(k);
      const Rational tk = 2 * kk + ab;
      b->push_back(to_real(Rational(4) * kk * (kk + alpha) * (kk + beta) *
                           (kk + ab) / (tk * tk * (tk + 1) * (tk - 1))));
    }
  }
}

void laguerre_recurrence(const Rational& alpha, unsigned n,
                         std::vector<Real>* a, std::vector<Real>* b) {
  for (unsigned k = 0; k < n; ++k) {
    a->push_back(to_real(Rational(2 * k) + alpha + 1));
    if (k == 0)
      b->push_back(gamma_real(alpha + 1));
    else
      b->push_back(to_real(Rational(k) * (Rational(k) + alpha)));
  }
}

// Orthonormal recurrence evaluation: value and derivative of ptilde_N at x,
// optionally sum_{k=0}^{N-1} ptilde_k(x)^2 (the Gaussian weight denominator).
void eval_orthonormal(const std::vector<Real>& a, const std::vector<Real>& sqb,
                      unsigned nn, const Real& x, Real* p_out, Real* dp_out,
                      Real* sumsq_out) {
  Real pm(0), dm(0);
  Real p = Real(1) / sqb[0];
  Real dp(0);
  Real ss = p * p;
  for (unsigned k = 0; k < nn; ++k) {
    Real pn = (x - a[k]) * p;
    Real dn = p + (x - a[k]) * dp;
    if (k > 0) {
      pn -= sqb[k] * pm;
      dn -= sqb[k] * dm;
    }
    pn /= sqb[k + 1];
    dn /= sqb[k + 1];
    pm = p;
    dm = dp;
    p = pn;
    dp = dn;
    if (sumsq_out && k + 1 < nn) ss += p * p;
  }
  *p_out = p;
  *dp_out = dp;
  if (sumsq_out) *sumsq_out = ss;
}

}  // namespace

void QuadratureRule::build(const std::vector<Real>& a,
                           const std::vector<Real>& b) {
  const unsigned nn = order_;
  std::vector<Real> sqb(b.size());
  for (size_t i = 0; i < b.size(); ++i) sqb[i] = sqrt(b[i]);

  // double-precision Golub-Welsch seeds
  Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(nn, nn);
  for (unsigned k = 0; k < nn; ++k) {
    jm(k, k) = a[k].convert_to<double>();
    if (k > 0) {
      const double off = sqb[k].convert_to<double>();
      jm(k, k - 1) = off;
      jm(k - 1, k) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("quadrature: eigensolver failed");

  const Real tol = ldexp(Real(1), -static_cast<int>(precision_bits()) + 6);
  nodes_.resize(nn);
  weights_.resize(nn);
  for (unsigned i = 0; i < nn; ++i) {
    Real x(es.eigenvalues()[i]);
    Real p, dp, ss;
    for (int it = 0; it < 100; ++it) {
      eval_orthonormal(a, sqb, nn, x, &p, &dp, nullptr);
      if (dp == 0) break;
      const Real step = p / dp;
      x -= step;
      if (abs(step) <= tol * (Real(1) + abs(x))) break;
    }
    eval_orthonormal(a, sqb, nn, x, &p, &dp, &ss);
    nodes_[i] = x;
    weights_[i] = Real(1) / ss;
  }
}

const QuadratureRule& QuadratureRule::gauss_jacobi(const Rational& alpha,
                                                   const Rational& beta,
                                                   unsigned order) {
  using Key = std::tuple<int, std::string, std::string, unsigned, unsigned>;
  static std::map<Key, QuadratureRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const Key key{0, alpha.str(), beta.str(), order, precision_bits()};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  if (alpha <= -1 || beta <= -1)
    throw std::invalid_argument("Gauss-Jacobi requires alpha, beta > -1");
  QuadratureRule rule;
  rule.kind_ = Kind::GaussJacobi;
  rule.alpha_ = alpha;
  rule.beta_ = beta;
  rule.order_ = order;
  std::vector<Real> a, b;
  jacobi_recurrence(alpha, beta, order + 1, &a, &b);
  rule.build(a, b);
  return cache.emplace(key, std::move(rule)).first->second;
}

const QuadratureRule& QuadratureRule::gauss_laguerre(const Rational& alpha,
                                                     unsigned order) {
  using Key = std::tuple<int, std::string, std::string, unsigned, unsigned>;
  static std::map<Key, QuadratureRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const Key key{1, alpha.str(), std::string(), order, precision_bits()};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
  if (alpha <= -1)
    throw std::invalid_argument("Gauss-Laguerre requires alpha > -1");
  QuadratureRule rule;
  rule.kind_ = Kind::GaussLaguerre;
  rule.alpha_ = alpha;
  rule.order_ = order;
  std::vector<Real> a, b;
  laguerre_recurrence(alpha, order + 1, &a, &b);
  rule.build(a, b);
  return cache.emplace(key, std::move(rule)).first->second;
}

Real QuadratureRule::integrate(
    const std::function<Real(const Real&)>& f) const {
  Real s(0);
  for (size_t i = 0; i < nodes_.size(); ++i) s += weights_[i] * f(nodes_[i]);
  return s;
}

}  // namespace x1
