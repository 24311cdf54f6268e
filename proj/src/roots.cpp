#include "x1/roots.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace x1 {

namespace {

void eval_with_derivative(const std::vector<Cplx>& coeffs, const Cplx& z,
                          Cplx* f, Cplx* df) {
  Cplx p(Real(0), Real(0)), dp(Real(0), Real(0));
  for (size_t j = coeffs.size(); j-- > 0;) {
    dp = dp * z + p;
    p = p * z + coeffs[j];
  }
  *f = p;
  *df = dp;
}

std::vector<Cplx> real_coeffs(const Polynomial& f) {
  std::vector<Cplx> c(f.degree() + 1);
  for (int j = 0; j <= f.degree(); ++j)
    c[j] = Cplx(to_real(f.coeff(j)), Real(0));
  return c;
}

// Newton iteration from a seed; roots of a squarefree polynomial are simple,
// so convergence is quadratic once in the basin.
Cplx newton_refine(const std::vector<Cplx>& coeffs, Cplx z) {
  const Real eps = ldexp(Real(1), -static_cast<int>(precision_bits()) + 8);
  for (int it = 0; it < 200; ++it) {
    Cplx f, df;
    eval_with_derivative(coeffs, z, &f, &df);
    if (df.abs2() == 0) break;
    const Cplx step = f / df;
    z = z - step;
    if (step.abs() <= eps * (Real(1) + z.abs())) break;
  }
  return z;
}

Real cauchy_bound(const std::vector<Cplx>& coeffs) {
  const Real lead = coeffs.back().abs();
  Real m = 0;
  for (size_t j = 0; j + 1 < coeffs.size(); ++j)
    m = std::max(m, coeffs[j].abs() / lead);
  return Real(1) + m;
}

// Aberth-Ehrlich simultaneous iteration; used when double-precision seeds are
// unavailable or collide after refinement.
std::vector<Cplx> aberth(const std::vector<Cplx>& coeffs) {
  const size_t d = coeffs.size() - 1;
  const Real r = cauchy_bound(coeffs) * Real("0.8");
  const Real pi = acos(Real(-1));
  std::vector<Cplx> z(d);
  for (size_t i = 0; i < d; ++i) {
    const Real th = (Real(2) * pi * Real(static_cast<unsigned>(i))) /
                        Real(static_cast<unsigned>(d)) +
                    Real("0.4");
    z[i] = Cplx(r * cos(th), r * sin(th));
  }
  const Real eps = ldexp(Real(1), -static_cast<int>(precision_bits()) + 8);
  for (int it = 0; it < 500; ++it) {
    Real worst = 0;
    for (size_t i = 0; i < d; ++i) {
      Cplx f, df;
      eval_with_derivative(coeffs, z[i], &f, &df);
      const Cplx w = (df.abs2() == 0) ? Cplx(Real(1), Real(0)) : f / df;
      Cplx s(Real(0), Real(0));
      for (size_t j = 0; j < d; ++j)
        if (j != i) s = s + Cplx(Real(1), Real(0)) / (z[i] - z[j]);
      const Cplx denom = Cplx(Real(1), Real(0)) - w * s;
      const Cplx step = (denom.abs2() == 0) ? w : w / denom;
      z[i] = z[i] - step;
      worst = std::max(worst, step.abs() / (Real(1) + z[i].abs()));
    }
    if (worst <= eps) break;
  }
  return z;
}

bool distinct(const std::vector<Cplx>& z, const Real& scale) {
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j)
      if (negligible((z[i] - z[j]).abs(), scale)) return false;
  return true;
}

void sort_roots(std::vector<Cplx>& z) {
  std::sort(z.begin(), z.end(), [](const Cplx& a, const Cplx& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
}

}  // namespace

bool negligible(const Real& v, const Real& scale) {
  const Real eps = ldexp(Real(1), -static_cast<int>(precision_bits()) / 2);
  return abs(v) <= eps * (Real(1) + abs(scale));
}

std::vector<Cplx> squarefree_roots(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("roots of zero polynomial");
  if (f.degree() == 0) return {};
  const std::vector<Cplx> coeffs = real_coeffs(f.monic());
  const size_t d = coeffs.size() - 1;

  std::vector<Cplx> seeds;
  bool seeded = false;
  {
    // Companion-matrix eigenvalues in double precision as seeds.
    std::vector<double> cd(d + 1);
    bool finite = true;
    for (size_t j = 0; j <= d; ++j) {
      cd[j] = coeffs[j].re.convert_to<double>();
      if (!std::isfinite(cd[j])) finite = false;
    }
    if (finite) {
      Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
      for (size_t i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
      for (size_t i = 0; i < d; ++i) comp(i, d - 1) = -cd[i];
      Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
      if (es.info() == Eigen::Success) {
        for (size_t i = 0; i < d; ++i)
          seeds.emplace_back(Real(es.eigenvalues()[i].real()),
                             Real(es.eigenvalues()[i].imag()));
        seeded = true;
      }
    }
  }

  std::vector<Cplx> roots;
  const Real scale = cauchy_bound(coeffs);
  if (seeded) {
    roots.reserve(d);
    for (const Cplx& s : seeds) roots.push_back(newton_refine(coeffs, s));
    if (!distinct(roots, scale)) seeded = false;
  }
  if (!seeded) {
    roots = aberth(coeffs);
    for (Cplx& z : roots) z = newton_refine(coeffs, z);
    if (!distinct(roots, scale))
      throw std::runtime_error("root refinement failed to separate roots");
  }

  // A real polynomial has conjugate-symmetric roots; snap negligible
  // imaginary parts (exact simple real roots refine to ~2^-prec).
  for (Cplx& z : roots)
    if (negligible(z.im, z.abs())) z.im = 0;
  sort_roots(roots);
  return roots;
}

std::vector<RootClass> classified_roots(const Polynomial& p) {
  std::vector<RootClass> out;
  for (const auto& [m, f] : squarefree_decomposition(p)) {
    for (const Cplx& z : squarefree_roots(f)) {
      RootClass rc;
      rc.multiplicity = m;
      rc.numeric = z;
      rc.is_real = (z.im == 0);
      if (rc.is_real) {
        if (auto cand = reconstruct_rational(z.re)) {
          if (f.evaluate(*cand) == 0) {
            rc.exact = *cand;
            rc.numeric = Cplx(to_real(*cand), Real(0));
          }
        }
      }
      out.push_back(std::move(rc));
    }
  }
  return out;
}

std::optional<Rational> reconstruct_rational(const Real& x) {
  const Real eps = ldexp(Real(1), -static_cast<int>(precision_bits()) / 2);
  const Int max_den = Int(1) << (precision_bits() / 3);
  Real v = x;
  Int p0 = 0, p1 = 1, q0 = 1, q1 = 0;  // convergents p1/q1
  for (int it = 0; it < 200; ++it) {
    const Real fl = floor(v);
    if (abs(fl) > Real(Int(1) << 256)) return std::nullopt;
    const Int a = Int(fl);
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    p1 = p2;
    q0 = q1;
    q1 = q2;
    const Rational cand(p1, q1);
    if (abs(x - to_real(cand)) <= eps * (Real(1) + abs(x))) return cand;
    const Real frac = v - fl;
    if (frac == 0) break;
    v = Real(1) / frac;
  }
  const Rational cand(p1, q1);
  if (q1 != 0 && abs(x - to_real(cand)) <= eps * (Real(1) + abs(x)))
    return cand;
  return std::nullopt;
}

}  // namespace x1
