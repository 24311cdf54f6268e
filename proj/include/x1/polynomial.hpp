#ifndef X1_POLYNOMIAL_HPP
#define X1_POLYNOMIAL_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "x1/numbers.hpp"

namespace x1 {

/// Dense univariate polynomial over Rational. Coefficient j is the
/// coefficient of x^j. Invariant: the vector is empty (zero polynomial) or
/// its last entry is nonzero; degree() is -1 for zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<Rational> coeffs)
      : c_(coeffs.begin(), coeffs.end()) {
    trim();
  }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  /// c * x^k
  static Polynomial monomial(unsigned k, const Rational& c = Rational(1));
  /// x - r
  static Polynomial linear_root(const Rational& r) {
    return Polynomial({-r, Rational(1)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^j (zero beyond the degree).
  Rational coeff(unsigned j) const {
    return j < c_.size() ? c_[j] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial operator/(const Rational& s) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  Real evaluate_real(const Real& x) const;
  Polynomial compose(const Polynomial& inner) const;
  Polynomial pow(unsigned e) const;
  /// Multiply by x^k.
  Polynomial shifted(unsigned k) const;
  Polynomial monic() const;

  /// Quotient and remainder; throws on division by the zero polynomial.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) {
  return p * s;
}

/// Monic gcd; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// True iff b divides a exactly.
bool divides(const Polynomial& b, const Polynomial& a);

}  // namespace x1

#endif
