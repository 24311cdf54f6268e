// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The same checks back the `x1 verify` subcommand.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "x1/verify.hpp"

int main(int argc, char** argv) {
  x1::VerifyConfig cfg;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      cfg.seed = std::strtoull(argv[++i], nullptr, 10);
    else if (std::strcmp(argv[i], "--quad-order") == 0 && i + 1 < argc)
      cfg.quad_order = static_cast<unsigned>(std::atoi(argv[++i]));
    else if (std::strcmp(argv[i], "--suite") == 0 && i + 1 < argc)
      cfg.suites.push_back(argv[++i]);
  }

  std::printf("acceptance suite: seed=%llu quad_order=%u precision=%u bits\n",
              static_cast<unsigned long long>(cfg.seed), cfg.quad_order,
              cfg.precision_bits);
  const x1::VerifyReport rep = x1::run_acceptance(cfg);
  int failures = 0;
  int index = 0;
  for (const auto& r : rep.results) {
    ++index;
    std::printf("[%s] %2d. %-42s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL",
                index, r.name.c_str(), r.seconds, r.detail.c_str());
    if (!r.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
