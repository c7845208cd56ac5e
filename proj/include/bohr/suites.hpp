#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bohr {

struct CheckResult {
  std::string name;
  bool pass = false;
  // Ordered metrics; printed in this order.
  std::vector<std::pair<std::string, double>> metrics;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
};

struct LemmaGrid {
  int points = 200;  // x, r in {0, 0.005, ..., 0.995}
  double tolerance = 1e-12;
};

// min Q >= -tol over x, r, m in 1..4, p in {0.1..1.0}; nonincreasing in x.
CheckResult check_lemma_Q(const LemmaGrid& grid = {});
// Same for P with p in {0.1..2.0}.
CheckResult check_lemma_P(const LemmaGrid& grid = {});
// |f^(k)(z)|/k! against the Ruscheweyh bound on random Blaschke products.
CheckResult check_ruscheweyh(std::uint64_t seed, int functions = 100);
// (1-a^2) a^{k-1} <= 2 (1-a) on the Moebius plus family.
CheckResult check_coefficient_bound();
// Sums A-D at 0.99 * canonical root for every catalog problem.
CheckResult check_inequalities(std::uint64_t seed, int random_functions = 100);
// Extremal margin at root + 0.01, a = 1 - 1e-3, for every catalog problem.
CheckResult check_sharpness();
// Canonical root at m = 1000 against the m -> infinity mode, per family.
CheckResult check_m_limit();

// suite: lemmas | inequalities | sharpness | all
SuiteReport run_suite(std::string_view suite, std::uint64_t seed);
bool is_known_suite(std::string_view suite);

}  // namespace bohr
