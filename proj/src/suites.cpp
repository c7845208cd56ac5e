#include "bohr/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "bohr/catalog.hpp"
#include "bohr/errors.hpp"
#include "bohr/functions.hpp"
#include "bohr/parallel.hpp"
#include "bohr/radius.hpp"
#include "bohr/verify.hpp"

namespace bohr {

namespace {

struct GridOutcome {
  double min_value = 0.0;
  double worst_increase = 0.0;
  long evaluations = 0;
};

template <class Lemma>
GridOutcome sweep_lemma(Lemma&& lemma, const LemmaGrid& grid, int p_steps) {
  GridOutcome out;
  out.min_value = std::numeric_limits<double>::infinity();
  out.worst_increase = -std::numeric_limits<double>::infinity();
  const double h = 1.0 / grid.points;
  for (int m = 1; m <= 4; ++m)
    for (int ip = 1; ip <= p_steps; ++ip) {
      const double p = 0.1 * ip;
      for (int ir = 0; ir < grid.points; ++ir) {
        const double r = ir * h;
        double prev = 0.0;
        for (int ix = 0; ix < grid.points; ++ix) {
          const double v = lemma(ix * h, r, p, m);
          out.min_value = std::min(out.min_value, v);
          if (ix > 0) out.worst_increase = std::max(out.worst_increase, v - prev);
          prev = v;
          ++out.evaluations;
        }
      }
    }
  return out;
}

CheckResult lemma_check(std::string name, const GridOutcome& g, double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.metrics = {{"min_value", g.min_value},
               {"max_increase_along_x", g.worst_increase},
               {"evaluations", static_cast<double>(g.evaluations)}};
  c.pass = g.min_value >= -tol && g.worst_increase <= tol;
  return c;
}

SubordinationPair scaled_identity(OuterMap outer, double a) {
  return {outer, BlaschkeProduct{{Complex{}}, Complex{a, 0.0}}};
}

// Upper estimate of one inequality side for a catalog problem.
InequalitySum evaluate_side(const RadiusProblem& problem, const AnalyticFunction& f,
                            double r) {
  switch (problem.theorem) {
    case Theorem::T1: return sum_A(f, problem.family, problem.p, r, problem.m);
    case Theorem::T2: return sum_B(f, problem.family, problem.p, r, problem.m);
    case Theorem::T3:
      return sum_C(std::get<SubordinationPair>(f), problem.family, r, problem.m);
    case Theorem::T4:
      return sum_D(std::get<SubordinationPair>(f), problem.family, r, problem.m);
  }
  throw DomainError("unknown theorem");
}

AnalyticFunction extremal_at(const RadiusProblem& problem, double a) {
  switch (problem.theorem) {
    case Theorem::T1: return MoebiusExtremal{a, MoebiusSign::Plus};
    case Theorem::T2: return MoebiusExtremal{a, MoebiusSign::Minus};
    case Theorem::T3: return scaled_identity(OuterMap::Koebe, a);
    case Theorem::T4: return scaled_identity(OuterMap::HalfPlane, a);
  }
  throw DomainError("unknown theorem");
}

AnalyticFunction random_admissible(const RadiusProblem& problem, std::mt19937_64& rng) {
  switch (problem.theorem) {
    case Theorem::T1:
    case Theorem::T2:
      return random_blaschke(rng);
    case Theorem::T3:
    case Theorem::T4: {
      BlaschkeSampling s;
      s.zero_at_origin = true;
      const OuterMap outer =
          problem.theorem == Theorem::T3 ? OuterMap::Koebe : OuterMap::HalfPlane;
      return SubordinationPair{outer, random_blaschke(rng, s)};
    }
  }
  throw DomainError("unknown theorem");
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

CheckResult check_lemma_Q(const LemmaGrid& grid) {
  return lemma_check("lemma_Q", sweep_lemma(lemma_Q, grid, 10), grid.tolerance);
}

CheckResult check_lemma_P(const LemmaGrid& grid) {
  return lemma_check("lemma_P", sweep_lemma(lemma_P, grid, 20), grid.tolerance);
}

CheckResult check_ruscheweyh(std::uint64_t seed, int functions) {
  constexpr int kMaxOrder = 8;
  constexpr int kAngles = 16;
  constexpr double kTol = 1e-9;
  struct Local {
    long checks = 0;
    long violations = 0;
    double max_excess = -std::numeric_limits<double>::infinity();
  };
  std::vector<Local> per(functions);
  parallel_for(per.size(), [&](std::size_t i) {
    auto rng = cell_rng(seed, 0x5255, i);
    const AnalyticFunction f = random_blaschke(rng);
    Local& loc = per[i];
    for (int ir = 0; ir <= 9; ++ir) {
      const double r = 0.1 * ir;
      for (int j = 0; j < kAngles; ++j) {
        const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / kAngles);
        const double fz2 = std::norm(eval(f, z));
        const auto local = local_expansion(std::get<BlaschkeProduct>(f), z, kMaxOrder, 0.0);
        for (int k = 1; k <= kMaxOrder; ++k) {
          const double lhs = std::abs(local.coefficients[k]);
          const double rhs =
              std::pow(1.0 + r, k - 1) / std::pow(1.0 - r * r, k) * (1.0 - fz2);
          const double excess = lhs - rhs;
          loc.max_excess = std::max(loc.max_excess, excess);
          if (excess > kTol) ++loc.violations;
          ++loc.checks;
        }
      }
    }
  });
  Local total;
  for (const auto& l : per) {
    total.checks += l.checks;
    total.violations += l.violations;
    total.max_excess = std::max(total.max_excess, l.max_excess);
  }
  CheckResult c;
  c.name = "ruscheweyh_bound";
  c.metrics = {{"functions", static_cast<double>(functions)},
               {"checks", static_cast<double>(total.checks)},
               {"violations", static_cast<double>(total.violations)},
               {"max_excess", total.max_excess}};
  c.pass = total.violations == 0;
  return c;
}

CheckResult check_coefficient_bound() {
  long violations = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int ia = 0; ia < 100; ++ia) {
    const double a = 0.01 * ia;
    const auto series = taylor_coefficients(MoebiusExtremal{a, MoebiusSign::Plus}, 64);
    for (int k = 1; k <= 64; ++k) {
      const double excess = std::abs(series.coefficients[k]) - 2.0 * (1.0 - a);
      worst = std::max(worst, excess);
      if (excess > 1e-15) ++violations;
    }
  }
  CheckResult c;
  c.name = "re_le_1_coefficient_bound";
  c.metrics = {{"violations", static_cast<double>(violations)}, {"max_excess", worst}};
  c.pass = violations == 0;
  return c;
}

CheckResult check_inequalities(std::uint64_t seed, int random_functions) {
  const auto catalog = catalog_problems();
  constexpr double kTol = 1e-12;
  constexpr std::array<double, 3> kExtremalA = {0.5, 0.9, 0.99};
  struct Local {
    long evaluations = 0;
    long violations = 0;
    double max_excess = -std::numeric_limits<double>::infinity();
    std::string first_violation;
  };
  std::vector<Local> per(catalog.size());
  parallel_for(catalog.size(), [&](std::size_t i) {
    const auto& entry = catalog[i];
    const double r = 0.99 * solve(entry.problem).root;
    Local& loc = per[i];
    auto record = [&](const InequalitySum& s, const std::string& what) {
      const double excess = s.upper() - s.bound;
      loc.max_excess = std::max(loc.max_excess, excess);
      ++loc.evaluations;
      if (excess > kTol) {
        if (loc.violations == 0) loc.first_violation = entry.label() + " " + what;
        ++loc.violations;
      }
    };
    for (double a : kExtremalA) {
      std::ostringstream what;
      what << "extremal a=" << a;
      record(evaluate_side(entry.problem, extremal_at(entry.problem, a), r), what.str());
    }
    for (int j = 0; j < random_functions; ++j) {
      auto rng = cell_rng(seed, i, static_cast<std::uint64_t>(j));
      record(evaluate_side(entry.problem, random_admissible(entry.problem, rng), r),
             "random #" + std::to_string(j));
    }
  });

  Local total;
  for (const auto& l : per) {
    total.evaluations += l.evaluations;
    total.violations += l.violations;
    total.max_excess = std::max(total.max_excess, l.max_excess);
    if (total.first_violation.empty()) total.first_violation = l.first_violation;
  }
  CheckResult c;
  c.name = "inequality_validity";
  c.metrics = {{"problems", static_cast<double>(catalog.size())},
               {"evaluations", static_cast<double>(total.evaluations)},
               {"violations", static_cast<double>(total.violations)},
               {"max_excess", total.max_excess}};
  c.detail = total.first_violation;
  c.pass = total.violations == 0;
  return c;
}

CheckResult check_sharpness() {
  const auto catalog = catalog_problems();
  std::vector<SharpnessProbe> probes(catalog.size());
  parallel_for(catalog.size(), [&](std::size_t i) {
    probes[i] = sharpness_probe(catalog[i].problem, 0.01, 1e-3);
  });
  long failures = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  double min_first_order = std::numeric_limits<double>::infinity();
  std::string first_failure;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& pr = probes[i];
    min_margin = std::min(min_margin, pr.margin);
    bool ok = pr.margin > 0.0;
    if (pr.first_order) {
      min_first_order = std::min(min_first_order, *pr.first_order);
      ok = ok && *pr.first_order > 0.0;
    }
    if (!ok) {
      if (failures == 0) first_failure = catalog[i].label();
      ++failures;
    }
  }
  CheckResult c;
  c.name = "sharpness";
  c.metrics = {{"problems", static_cast<double>(probes.size())},
               {"failures", static_cast<double>(failures)},
               {"min_margin", min_margin},
               {"min_first_order", min_first_order}};
  c.detail = first_failure;
  c.pass = failures == 0;
  return c;
}

CheckResult check_m_limit() {
  // One representative per (theorem, family, p).
  std::map<std::string, RadiusProblem> families;
  for (const auto& e : catalog_problems()) {
    std::ostringstream key;
    key << to_string(e.problem.theorem) << " " << e.problem.family.describe();
    if (e.problem.theorem == Theorem::T1 || e.problem.theorem == Theorem::T2)
      key << " p=" << e.problem.p;
    families.emplace(key.str(), e.problem);
  }
  double worst = 0.0;
  std::string worst_key;
  for (const auto& [key, problem] : families) {
    RadiusProblem finite = problem;
    finite.m = ArgumentPower(1000);
    RadiusProblem limit = problem;
    limit.m = ArgumentPower::infinite();
    const double d = std::abs(solve(finite).root - solve(limit).root);
    if (d > worst) {
      worst = d;
      worst_key = key;
    }
  }
  CheckResult c;
  c.name = "m_limit_convergence";
  c.metrics = {{"families", static_cast<double>(families.size())}, {"max_difference", worst}};
  c.detail = worst_key;
  c.pass = worst <= 1e-6;
  return c;
}

bool is_known_suite(std::string_view suite) {
  return suite == "lemmas" || suite == "inequalities" || suite == "sharpness" || suite == "all";
}

SuiteReport run_suite(std::string_view suite, std::uint64_t seed) {
  if (!is_known_suite(suite)) throw DomainError("unknown suite: " + std::string(suite));
  SuiteReport report;
  report.suite = std::string(suite);
  report.seed = seed;
  const bool all = suite == "all";
  if (all || suite == "lemmas") {
    report.checks.push_back(check_lemma_Q());
    report.checks.push_back(check_lemma_P());
    report.checks.push_back(check_ruscheweyh(seed));
    report.checks.push_back(check_coefficient_bound());
  }
  if (all || suite == "inequalities") report.checks.push_back(check_inequalities(seed));
  if (all || suite == "sharpness") {
    report.checks.push_back(check_sharpness());
    report.checks.push_back(check_m_limit());
  }
  return report;
}

}  // namespace bohr
