#include "x1/mobius.hpp"

#include <stdexcept>

namespace x1 {

MobiusMap::MobiusMap(Rational alpha, Rational beta, Rational gamma,
                     Rational delta)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      delta_(std::move(delta)) {
  const Rational d = det();
  if (d == 0) throw std::invalid_argument("Mobius map: zero determinant");
  if (d != 1) {
    if (auto s = rational_sqrt(d)) {
      alpha_ /= *s;
      beta_ /= *s;
      gamma_ /= *s;
      delta_ /= *s;
    } else {
      // Primitive integer representative with canonical sign.
      Int l = lcm(lcm(Int(denominator(alpha_)), Int(denominator(beta_))),
                  lcm(Int(denominator(gamma_)), Int(denominator(delta_))));
      Rational f(l);
      Int g = gcd(gcd(numerator(alpha_ * f), numerator(beta_ * f)),
                  gcd(numerator(gamma_ * f), numerator(delta_ * f)));
      f /= Rational(g);
      for (Rational* e : {&alpha_, &beta_, &gamma_, &delta_}) {
        if (*e != 0) {
          if (*e * f < 0) f = -f;
          break;
        }
      }
      alpha_ *= f;
      beta_ *= f;
      gamma_ *= f;
      delta_ *= f;
    }
  }
}

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
  return MobiusMap(alpha_ * o.alpha_ + beta_ * o.gamma_,
                   alpha_ * o.beta_ + beta_ * o.delta_,
                   gamma_ * o.alpha_ + delta_ * o.gamma_,
                   gamma_ * o.beta_ + delta_ * o.delta_);
}

MobiusMap MobiusMap::inverse() const {
  return MobiusMap(delta_, -beta_, -gamma_, alpha_);
}

std::optional<Rational> MobiusMap::apply(const Rational& x) const {
  const Rational den = gamma_ * x + delta_;
  if (den == 0) return std::nullopt;
  return (alpha_ * x + beta_) / den;
}

bool MobiusMap::operator==(const MobiusMap& o) const {
  return alpha_ == o.alpha_ && beta_ == o.beta_ && gamma_ == o.gamma_ &&
         delta_ == o.delta_;
}

Polynomial mobius_compose_num(const Polynomial& p, const MobiusMap& g) {
  // sum_j p_j (alpha x + beta)^j (gamma x + delta)^(d-j), d = deg p
  if (p.is_zero()) return p;
  const unsigned d = static_cast<unsigned>(p.degree());
  const Polynomial top({g.beta(), g.alpha()});
  const Polynomial bot({g.delta(), g.gamma()});
  // Horner in the numerator of zeta: sum p_j top^j bot^(d-j)
  Polynomial r = Polynomial::constant(p.coeff(d));
  for (int j = static_cast<int>(d) - 1; j >= 0; --j)
    r = r * top + Polynomial::constant(p.coeff(j)) * bot.pow(d - j);
  return r;
}

Polynomial mobius_act(const Polynomial& p, const MobiusMap& g, unsigned n) {
  if (p.degree() > static_cast<int>(n))
    throw std::invalid_argument("mobius_act: degree exceeds ambient degree");
  if (p.is_zero()) return p;
  const unsigned d = static_cast<unsigned>(p.degree());
  const Polynomial bot({g.delta(), g.gamma()});
  return mobius_compose_num(p, g) * bot.pow(n - d);
}

RationalFunction mobius_compose(const RationalFunction& f, const MobiusMap& g) {
  if (f.is_zero()) return f;
  const Polynomial bot({g.delta(), g.gamma()});
  const unsigned dn = static_cast<unsigned>(f.num().degree());
  const unsigned dd = static_cast<unsigned>(f.den().degree());
  Polynomial num = mobius_compose_num(f.num(), g);
  Polynomial den = mobius_compose_num(f.den(), g);
  if (dn > dd)
    den = den * bot.pow(dn - dd);
  else if (dd > dn)
    num = num * bot.pow(dd - dn);
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace x1
