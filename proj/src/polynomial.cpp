#include "x1/polynomial.hpp"

#include <stdexcept>

namespace x1 {

Polynomial Polynomial::monomial(unsigned k, const Rational& c) {
  if (c == 0) return Polynomial();
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(c_);
  for (auto& x : v) x = -x;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return Polynomial();
  std::vector<Rational> v(c_);
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator/(const Rational& s) const {
  if (s == 0) throw std::domain_error("division by zero scalar");
  std::vector<Rational> v(c_);
  for (auto& x : v) x /= s;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> v(c_.size() - 1);
  for (size_t j = 1; j < c_.size(); ++j) v[j - 1] = c_[j] * Rational(j);
  return Polynomial(std::move(v));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational r = 0;
  for (size_t j = c_.size(); j-- > 0;) r = r * x + c_[j];
  return r;
}

Real Polynomial::evaluate_real(const Real& x) const {
  Real r = 0;
  for (size_t j = c_.size(); j-- > 0;) r = r * x + to_real(c_[j]);
  return r;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial r;
  for (size_t j = c_.size(); j-- > 0;)
    r = r * inner + Polynomial::constant(c_[j]);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

Polynomial Polynomial::shifted(unsigned k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : Polynomial();
  std::vector<Rational> v(c_.size() + k, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) v[j + k] = c_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial r = a;
  std::vector<Rational> q;
  const int db = b.degree();
  if (r.degree() >= db) q.assign(r.degree() - db + 1, Rational(0));
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    const Rational f = r.leading() / b.leading();
    q[k] = f;
    r -= b.shifted(k) * f;
  }
  return {Polynomial(std::move(q)), r};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    Polynomial r = Polynomial::divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return u.is_zero() ? u : u.monic();
}

bool divides(const Polynomial& b, const Polynomial& a) {
  if (b.is_zero()) return a.is_zero();
  return Polynomial::divmod(a, b).second.is_zero();
}

}  // namespace x1
