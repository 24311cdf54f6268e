#ifndef X1_VERIFY_HPP
#define X1_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "x1/mobius.hpp"
#include "x1/polynomial.hpp"
#include "x1/subspace.hpp"

namespace x1 {

/// Deterministic generators for the randomized suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi);
  Rational rational(long max_num = 9, long max_den = 4);
  Rational nonzero_rational(long max_num = 9, long max_den = 4);
  /// Product of elementary shears: always determinant 1.
  MobiusMap unimodular(int shears = 4);
  Polynomial polynomial(unsigned max_degree, long max_coeff = 5);
  /// Random codimension-one subspace of P_n with independent basis.
  Subspace codim1_subspace(unsigned n, long max_coeff = 5);

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

struct VerifyConfig {
  std::uint64_t seed = 20260810;
  unsigned quad_order = 200;
  unsigned precision_bits = 256;
  /// Criterion ids to run; empty = all.
  std::vector<std::string> suites;
  /// Overrides for the parameterized "gram" suite.
  std::optional<Rational> gram_alpha, gram_beta;
};

struct CriterionResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  unsigned quad_order = 0;
  unsigned precision_bits = 0;
  std::vector<CriterionResult> results;
  bool all_pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
};

/// Run the acceptance criteria (all, or the configured subset). Criterion
/// ids: dims, flag, bochner, allsl2, covariant, gamma, jacobi, laguerre,
/// gramschmidt, boundary, equivalence, and the parameterized extra "gram".
VerifyReport run_acceptance(const VerifyConfig& cfg);

}  // namespace x1

#endif
