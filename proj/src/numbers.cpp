#include "x1/numbers.hpp"

#include <cmath>
#include <stdexcept>

namespace x1 {

namespace {
unsigned g_precision_bits = 256;

unsigned digits10_for_bits(unsigned bits) {
  // ceil(bits * log10(2)) plus a small guard
  return static_cast<unsigned>(bits * 0.30103) + 4;
}
}  // namespace

Rational parse_rational(const std::string& s) {
  std::string t;
  t.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(t));
    Int num(t.substr(0, slash));
    Int den(t.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);  // two-arg ctor canonicalizes
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string rational_str(const Rational& q) { return q.str(); }

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact at each step
  }
  return r;
}

Rational binomial_rational(const Rational& z, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (z - Rational(i));
  return r / Rational(factorial(k));
}

Real to_real(const Rational& q) {
  return Real(numerator(q)) / Real(denominator(q));
}

void set_precision_bits(unsigned bits) {
  if (bits < 64) throw std::invalid_argument("precision must be >= 64 bits");
  g_precision_bits = bits;
  Real::default_precision(digits10_for_bits(bits));
}

unsigned precision_bits() { return g_precision_bits; }

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(g_precision_bits) {
  set_precision_bits(bits);
}

PrecisionGuard::~PrecisionGuard() { set_precision_bits(saved_); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (q == 0) return Rational(0);
  Int num = numerator(q), den = denominator(q);
  Int sn = sqrt(num), sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

namespace {
// Apply the default precision once at startup so translation units that use
// Real before main() still get 256 bits.
struct PrecisionInit {
  PrecisionInit() { Real::default_precision(digits10_for_bits(256)); }
} g_precision_init;
}  // namespace

}  // namespace x1
