#ifndef X1_ROOTS_HPP
#define X1_ROOTS_HPP

#include <optional>
#include <vector>

#include "x1/polynomial.hpp"
#include "x1/squarefree.hpp"

namespace x1 {

/// Minimal complex type over the working-precision Real. std::complex is not
/// specified for user-defined scalars, so the few operations needed by root
/// refinement live here.
struct Cplx {
  Real re, im;

  Cplx() : re(0), im(0) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Cplx(const Real& r) : re(r), im(0) {}

  Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
  Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
  Cplx operator*(const Cplx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cplx operator/(const Cplx& o) const {
    const Real d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  Cplx operator-() const { return {-re, -im}; }
  Real abs2() const { return re * re + im * im; }
  Real abs() const { return sqrt(abs2()); }
  Cplx conj() const { return {re, -im}; }
};

/// All distinct roots of a squarefree polynomial, refined to the working
/// precision. Deterministic ordering: by (re, im) ascending.
std::vector<Cplx> squarefree_roots(const Polynomial& f);

struct RootClass {
  unsigned multiplicity = 1;
  Cplx numeric;
  std::optional<Rational> exact;  // set when the root is exactly rational
  bool is_real = false;
};

/// Roots of an arbitrary nonzero polynomial with exact multiplicities from
/// the squarefree structure; rational roots are detected exactly.
std::vector<RootClass> classified_roots(const Polynomial& p);

/// Best rational approximation by continued fractions, accepted only when it
/// matches x to roughly half the working precision. Pure reconstruction; any
/// exactness claim must be verified by the caller.
std::optional<Rational> reconstruct_rational(const Real& x);

/// Threshold helper: |v| below 2^(-bits/2) relative to scale.
bool negligible(const Real& v, const Real& scale);

}  // namespace x1

#endif
