#include <doctest.h>

#include <cmath>

#include "bohr/catalog.hpp"
#include "bohr/errors.hpp"
#include "bohr/radius.hpp"

using namespace bohr;

namespace {

double literal_root(LiteralTag tag, double p, int m, int N) {
  return solve(literal_problem(tag, {p, m, N})).root;
}

RadiusProblem problem(Theorem t, WeightFamily f, ArgumentPower m, double p = 1.0) {
  RadiusProblem pr;
  pr.theorem = t;
  pr.family = f;
  pr.m = m;
  pr.p = p;
  return pr;
}

}  // namespace

TEST_CASE("closed-form anchors") {
  CHECK(std::abs(literal_root(LiteralTag::R2eq, 2.0, 1, 1) - 0.5) <= 1e-10);
  CHECK(std::abs(literal_root(LiteralTag::R3eq, 1.0, 1, 1) - (2.0 - std::sqrt(3.0))) <= 1e-10);
  CHECK(std::abs(literal_root(LiteralTag::R7eq, 1.0, 1, 1) - (std::sqrt(5.0) - 2.0)) <= 1e-10);
  CHECK(std::abs(literal_root(LiteralTag::R15eq, 1.0, 2, 1) - 1.0 / std::sqrt(5.0)) <= 1e-10);
  const double t4 = solve(problem(Theorem::T4, WeightFamily::empty(), ArgumentPower(1))).root;
  CHECK(std::abs(t4 - 1.0 / 3.0) <= 1e-10);
  const double t3 = solve(problem(Theorem::T3, WeightFamily::empty(), ArgumentPower(1))).root;
  CHECK(std::abs(t3 - (3.0 - 2.0 * std::sqrt(2.0))) <= 1e-10);
}

TEST_CASE("classical Bohr radius and its p-version in the limit mode") {
  for (double p : {0.1, 0.25, 0.5, 0.75, 1.0}) {
    const double r =
        solve(problem(Theorem::T1, WeightFamily::power(1), ArgumentPower::infinite(), p)).root;
    CHECK(std::abs(r - p / (p + 2.0)) <= 1e-10);
  }
}

TEST_CASE("printed cells quoted as examples") {
  CHECK(std::abs(literal_root(LiteralTag::R1eq, 1.0, 1, 5) - 0.568466) <= 5e-5);
  CHECK(std::abs(literal_root(LiteralTag::R8eq, 1.0, 1, 5) - 0.470417) <= 5e-5);
  CHECK(std::abs(literal_root(LiteralTag::R9eq, 1.0, 1, 5) - 0.459924) <= 5e-5);
  CHECK(std::abs(literal_root(LiteralTag::R11eq, 1.0, 1, 5) - 0.171125) <= 5e-5);
  CHECK(std::abs(literal_root(LiteralTag::R12eq, 1.0, 1, 1) - 0.14813) <= 5e-5);
  CHECK(std::abs(literal_root(LiteralTag::R12eq, 1.0, 2, 1) - 0.26795) <= 5e-5);
  CHECK(std::abs(literal_root(LiteralTag::R14eq, 1.0, 1, 5) - 0.330697) <= 5e-5);
  CHECK(std::abs(literal_root(LiteralTag::R16eq, 1.0, 1, 1) - 0.21525) <= 5e-5);
  CHECK(std::abs(literal_root(LiteralTag::R2eq, 1.0, 1, 1) - 0.41421) <= 5e-5);
}

TEST_CASE("every catalog root is a genuine sign change") {
  for (const auto& e : catalog_problems()) {
    CAPTURE(e.label());
    for (const auto& pr : {e.problem, literal_problem(e.tag, e.params)}) {
      const auto r = solve(pr);
      const auto F = defining_function(pr);
      CHECK(r.residual <= 1e-9);
      CHECK(r.hi - r.lo <= 1e-12);
      CHECK(std::signbit(F(r.root - 1e-4)) != std::signbit(F(r.root + 1e-4)));
    }
  }
}

TEST_CASE("roots are stable under scan refinement") {
  RootOptions fine;
  fine.scan_step = 5e-4;
  for (const auto& e : catalog_problems()) {
    CAPTURE(e.label());
    CHECK(std::abs(solve(e.problem).root - solve(e.problem, fine).root) <= 1e-10);
  }
}

TEST_CASE("monotonicity in m, N and p") {
  // Larger m shrinks x^m, larger N drops terms, larger p relaxes the bound.
  for (int N = 1; N <= 6; ++N) {
    double prev_m = 0.0;
    for (int m = 1; m <= 6; ++m) {
      const double r = solve(problem(Theorem::T1, WeightFamily::power(N), ArgumentPower(m))).root;
      CHECK(r >= prev_m);
      prev_m = r;
    }
  }
  double prev_N = 0.0;
  for (int N = 1; N <= 12; ++N) {
    const double r = solve(problem(Theorem::T4, WeightFamily::power(N), ArgumentPower(2))).root;
    CHECK(r > prev_N);
    prev_N = r;
  }
  double prev_p = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double r =
        solve(problem(Theorem::T2, WeightFamily::power(3), ArgumentPower(2), 0.1 * i)).root;
    CHECK(r > prev_p);
    prev_p = r;
  }
}

TEST_CASE("m -> infinity limit is approached from below") {
  const auto limit = solve(problem(Theorem::T3, WeightFamily::power(2), ArgumentPower::infinite())).root;
  const auto m1000 = solve(problem(Theorem::T3, WeightFamily::power(2), ArgumentPower(1000))).root;
  const auto m5 = solve(problem(Theorem::T3, WeightFamily::power(2), ArgumentPower(5))).root;
  CHECK(std::abs(limit - m1000) <= 1e-6);
  CHECK(m5 < limit);
}

TEST_CASE("root finder failures") {
  CHECK_THROWS_AS(minimal_positive_root([](double) { return 1.0; }), NoSignChangeError);
  CHECK_THROWS_AS(minimal_positive_root([](double x) {
                    if (x > 0.5) throw DivergenceError("kernel");
                    return 1.0;
                  }),
                  UndefinedRegionError);
  // Domain barrier after a sign change is harmless.
  const auto r = minimal_positive_root([](double x) {
    if (x > 0.5) throw DivergenceError("kernel");
    return 0.25 - x;
  });
  CHECK(r.root == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(validate(problem(Theorem::T1, WeightFamily::power(1), ArgumentPower(1), 1.5)),
                  DomainError);
  auto extended = problem(Theorem::T1, WeightFamily::power(1), ArgumentPower(1), 1.5);
  extended.allow_extended_p = true;
  CHECK_NOTHROW(validate(extended));
  CHECK_THROWS_AS(validate(problem(Theorem::T2, WeightFamily::power(1), ArgumentPower(1), 2.5)),
                  DomainError);
  auto mismatched = problem(Theorem::T3, WeightFamily::power(5), ArgumentPower(1));
  mismatched.literal = LiteralTag::R14eq;
  CHECK_THROWS_AS(validate(mismatched), DomainError);
  CHECK(parse_literal_tag("R7eq") == LiteralTag::R7eq);
  CHECK_FALSE(parse_literal_tag("R17eq"));
  CHECK(parse_theorem("T3") == Theorem::T3);
  CHECK(theorem_of(LiteralTag::R10eq) == Theorem::T2);
}
