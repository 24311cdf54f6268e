#ifndef X1_MOBIUS_HPP
#define X1_MOBIUS_HPP

#include "x1/polynomial.hpp"
#include "x1/rational_function.hpp"

namespace x1 {

/// Fractional linear map zeta(x) = (alpha x + beta) / (gamma x + delta) with
/// rational entries and nonzero determinant. On construction the matrix is
/// rescaled to determinant 1 whenever the determinant is a square of a
/// rational (always the case for products of elementary shears); otherwise a
/// primitive integer representative is kept and the map acts projectively,
/// which is all the subspace and covariant machinery needs.
class MobiusMap {
 public:
  MobiusMap(Rational alpha, Rational beta, Rational gamma, Rational delta);

  static MobiusMap identity() {
    return MobiusMap(Rational(1), Rational(0), Rational(0), Rational(1));
  }
  static MobiusMap translation(const Rational& t) {
    return MobiusMap(Rational(1), t, Rational(0), Rational(1));
  }
  /// x -> -1/x
  static MobiusMap inversion() {
    return MobiusMap(Rational(0), Rational(-1), Rational(1), Rational(0));
  }

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }
  const Rational& delta() const { return delta_; }

  Rational det() const { return alpha_ * delta_ - beta_ * gamma_; }
  bool is_unimodular() const { return det() == 1; }

  /// Matrix product; as maps, (g * h)(x) = g(h(x)).
  MobiusMap operator*(const MobiusMap& o) const;
  MobiusMap inverse() const;

  /// zeta evaluated at a rational point; nullopt when x is the pole.
  std::optional<Rational> apply(const Rational& x) const;

  bool operator==(const MobiusMap& o) const;

 private:
  Rational alpha_, beta_, gamma_, delta_;
};

/// Weight-n projective action: (gamma x + delta)^n * (p o zeta).
/// Exact; pre: deg p <= n.
Polynomial mobius_act(const Polynomial& p, const MobiusMap& g, unsigned n);

/// Composition with zeta for a plain polynomial, returned as the pair
/// (numerator, e) with p o zeta = numerator / (gamma x + delta)^e, e = deg p.
Polynomial mobius_compose_num(const Polynomial& p, const MobiusMap& g);

/// p o zeta as a reduced rational function.
RationalFunction mobius_compose(const RationalFunction& f, const MobiusMap& g);

}  // namespace x1

#endif
