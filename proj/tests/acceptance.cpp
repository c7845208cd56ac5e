// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bohr/catalog.hpp"
#include "bohr/commands.hpp"
#include "bohr/parallel.hpp"
#include "bohr/suites.hpp"
#include "bohr/verify.hpp"

using namespace bohr;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v) { return format_number(v); }

std::string metrics(const CheckResult& c) {
  std::ostringstream os;
  for (const auto& [k, v] : c.metrics) os << ' ' << k << '=' << num(v);
  if (!c.detail.empty()) os << " (" << c.detail << ')';
  return os.str();
}

Outcome golden_tables_check() {
  const auto t0 = std::chrono::steady_clock::now();
  int total = 0, passed = 0;
  double worst = 0.0;
  std::string failures;
  for (const auto& table : golden_tables())
    for (const auto& cell : table.cells) {
      ++total;
      double delta = INFINITY;
      try {
        delta = std::abs(solve(literal_problem(table.tag, cell.params)).root - cell.golden);
      } catch (const Error&) {
      }
      worst = std::max(worst, delta);
      if (delta <= kGoldenTolerance) {
        ++passed;
      } else {
        std::ostringstream os;
        os << ' ' << table.id << "[m=" << cell.params.m << ",N=" << cell.params.N
           << ",p=" << num(cell.params.p) << "] printed " << cell.printed << " |delta|=" << num(delta);
        failures += os.str();
      }
    }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << "cells=" << total << " within_tol=" << passed << " tol=" << num(kGoldenTolerance)
     << " max_delta=" << num(worst) << " seconds=" << num(seconds);
  if (!failures.empty()) os << " failing:" << failures;
  return {passed == total && seconds < 10.0, os.str()};
}

Outcome anchors_check() {
  struct Anchor {
    const char* name;
    double computed;
    double exact;
  };
  auto lit = [](LiteralTag tag, double p, int m, int N) {
    return solve(literal_problem(tag, {p, m, N})).root;
  };
  auto limit = [](Theorem t) {
    RadiusProblem pr;
    pr.theorem = t;
    pr.family = WeightFamily::empty();
    return solve(pr).root;
  };
  const Anchor anchors[] = {
      {"R2(m=1,p=2)=1/2", lit(LiteralTag::R2eq, 2.0, 1, 1), 0.5},
      {"R3(m=1,p=1)=2-sqrt3", lit(LiteralTag::R3eq, 1.0, 1, 1), 2.0 - std::sqrt(3.0)},
      {"R7(n=1)=sqrt5-2", lit(LiteralTag::R7eq, 1.0, 1, 1), std::sqrt(5.0) - 2.0},
      {"R15(m=2)=1/sqrt5", lit(LiteralTag::R15eq, 1.0, 2, 1), 1.0 / std::sqrt(5.0)},
      {"T4 N->inf=1/3", limit(Theorem::T4), 1.0 / 3.0},
      {"T3 N->inf=3-2sqrt2", limit(Theorem::T3), 3.0 - 2.0 * std::sqrt(2.0)},
  };
  bool pass = true;
  double worst = 0.0;
  std::string worst_name;
  for (const auto& a : anchors) {
    const double e = std::abs(a.computed - a.exact);
    if (e >= worst) {
      worst = e;
      worst_name = a.name;
    }
    pass = pass && e <= 1e-10;
  }
  return {pass, "anchors=6 tol=1e-10 max_error=" + num(worst) + " at " + worst_name};
}

Outcome from_check(const CheckResult& c) { return {c.pass, c.name + metrics(c)}; }

Outcome lemmas_check() {
  const auto q = check_lemma_Q();
  const auto p = check_lemma_P();
  return {q.pass && p.pass, q.name + metrics(q) + "; " + p.name + metrics(p)};
}

Outcome audit_check() {
  const std::set<LiteralTag> expected_consistent = {
      LiteralTag::R1eq,  LiteralTag::R2eq,  LiteralTag::R3eq,  LiteralTag::R4eq,
      LiteralTag::R7eq,  LiteralTag::R9eq,  LiteralTag::R10eq, LiteralTag::R11eq,
      LiteralTag::R12eq, LiteralTag::R14eq, LiteralTag::R15eq, LiteralTag::R16eq,
  };
  struct TagSummary {
    int rows = 0;
    int consistent = 0;
    bool complete = true;  // both roots and the cross residual present
    double max_difference = 0.0;
  };
  std::map<LiteralTag, TagSummary> tags;
  for (const auto& table : golden_tables())
    for (const auto& cell : table.cells) {
      const auto rec = audit(table.tag, cell.params);
      auto& s = tags[table.tag];
      ++s.rows;
      if (rec.verdict == Verdict::Consistent) ++s.consistent;
      if (!rec.root_literal || !rec.root_canonical || !rec.cross_residual) {
        s.complete = false;
      } else {
        s.max_difference = std::max(s.max_difference, std::abs(*rec.root_literal - *rec.root_canonical));
      }
    }
  bool pass = static_cast<int>(tags.size()) == kLiteralTagCount;
  std::string others;
  for (const auto& [tag, s] : tags) {
    if (expected_consistent.count(tag)) {
      pass = pass && s.consistent == s.rows;
    } else {
      pass = pass && s.complete;
      others += ' ' + to_string(tag) + ":" + std::to_string(s.rows - s.consistent) + "/" +
                std::to_string(s.rows) + " discrepant, max_root_difference=" + num(s.max_difference);
    }
  }
  return {pass, "tags=" + std::to_string(tags.size()) + " others:" + others};
}

Outcome determinism_check() {
  auto capture = [](const std::function<int(std::ostream&, std::ostream&)>& cmd) {
    std::ostringstream out, err;
    cmd(out, err);
    return out.str();
  };
  auto verify_all = [](std::ostream& o, std::ostream& e) {
    return cmd_verify("all", kSeed, Format::Csv, o, e);
  };
  auto tables_all = [](std::ostream& o, std::ostream& e) {
    return cmd_tables({"all"}, Format::Csv, o, e);
  };
  set_thread_count(0);
  const auto v1 = capture(verify_all);
  const auto v2 = capture(verify_all);
  const auto t1 = capture(tables_all);
  const auto t2 = capture(tables_all);
  set_thread_count(1);
  const auto v_serial = capture(verify_all);
  const auto t_serial = capture(tables_all);
  set_thread_count(4);
  const auto v_four = capture(verify_all);
  const auto t_four = capture(tables_all);
  set_thread_count(0);
  const bool verify_same = v1 == v2 && v1 == v_serial && v1 == v_four;
  const bool tables_same = t1 == t2 && t1 == t_serial && t1 == t_four;
  return {verify_same && tables_same && !v1.empty() && !t1.empty(),
          std::string("verify_identical=") + (verify_same ? "yes" : "no") +
              " tables_identical=" + (tables_same ? "yes" : "no") +
              " runs=repeat,1-thread,4-threads seed=" + std::to_string(kSeed)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden_tables", golden_tables_check},
      {2, "closed_form_anchors", anchors_check},
      {3, "lemma_suites", lemmas_check},
      {4, "ruscheweyh_bound", [] { return from_check(check_ruscheweyh(kSeed)); }},
      {5, "inequality_validity", [] { return from_check(check_inequalities(kSeed)); }},
      {6, "sharpness", [] { return from_check(check_sharpness()); }},
      {7, "audit_report", audit_check},
      {8, "m_limit_convergence", [] { return from_check(check_m_limit()); }},
      {9, "determinism", determinism_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %d %-20s %s  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
