#ifndef X1_NUMBERS_HPP
#define X1_NUMBERS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>

namespace x1 {

namespace mp = boost::multiprecision;

/// Exact arbitrary-precision integer (GMP-backed).
using Int = mp::number<mp::gmp_int, mp::et_off>;

/// Exact rational scalar, always kept canonical: gcd(num, den) = 1, den > 0.
/// GMP's mpq maintains this invariant for all arithmetic; string input goes
/// through parse_rational which canonicalizes explicitly.
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

/// Variable-precision real (MPFR-backed). Working precision is process-wide,
/// set via set_precision_bits; default is 256 bits.
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

/// Parse "p", "p/q" (optionally signed). Throws std::invalid_argument on
/// malformed input or q = 0.
Rational parse_rational(const std::string& s);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& q);

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

/// Generalized binomial C(z, k) = z(z-1)...(z-k+1)/k! for rational z.
Rational binomial_rational(const Rational& z, unsigned k);

Real to_real(const Rational& q);

/// Set the process-wide working precision for Real. bits >= 64.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// RAII scope for a temporary precision change.
struct PrecisionGuard {
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// True if q = (p/r)^2 for some rational p/r; returns the positive square root.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace x1

#endif
