#ifndef X1_RATIONAL_FUNCTION_HPP
#define X1_RATIONAL_FUNCTION_HPP

#include "x1/polynomial.hpp"

namespace x1 {

/// Reduced quotient of two polynomials: gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(Rational(1))) {}
  RationalFunction(Polynomial num, Polynomial den);
  /* implicit */ RationalFunction(const Polynomial& p)
      : num_(p), den_(Polynomial::constant(Rational(1))) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Pre: is_polynomial().
  const Polynomial& as_polynomial() const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator*(const Rational& s) const;
  RationalFunction& operator+=(const RationalFunction& o) {
    return *this = *this + o;
  }

  RationalFunction derivative() const;

 private:
  Polynomial num_, den_;
};

inline RationalFunction operator*(const Rational& s,
                                  const RationalFunction& f) {
  return f * s;
}

}  // namespace x1

#endif
