#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "bohr/weights.hpp"

namespace bohr {

enum class Theorem {
  T1,  // |f(z^m)|^p nu_0 + sum |a_k| nu_k, Re f <= 1
  T2,  // derivative kernel sum for f in the unit-ball class
  T3,  // subordination to a univalent map
  T4,  // subordination to a convex univalent map
};

enum class LiteralTag {
  R1eq, R2eq, R3eq, R4eq, R5eq, R6eq, R7eq, R8eq,
  R9eq, R10eq, R11eq, R12eq, R13eq, R14eq, R15eq, R16eq,
};

inline constexpr int kLiteralTagCount = 16;

std::string to_string(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view s);
std::string to_string(LiteralTag tag);
std::optional<LiteralTag> parse_literal_tag(std::string_view s);
// Theorem whose condition the printed equation instantiates.
Theorem theorem_of(LiteralTag tag);

// Parameters of a printed example equation. For R7eq, N carries n.
struct LiteralParams {
  double p = 1.0;
  int m = 1;
  int N = 1;
};

using DefiningFunction = std::function<double(double)>;

struct RadiusProblem {
  Theorem theorem = Theorem::T1;
  double p = 1.0;
  ArgumentPower m{1};
  WeightFamily family = WeightFamily::power(1);
  std::optional<LiteralTag> literal;
  // Lets T1 accept p in (0,2] (the unit-ball class range) instead of (0,1].
  bool allow_extended_p = false;

  // (p, m, N) handed to the printed equation in literal mode.
  LiteralParams literal_params() const;
};

// Throws DomainError when p, m, the family or the literal tag are
// inconsistent with the theorem.
void validate(const RadiusProblem& problem);

// F > 0 exactly where the theorem's condition holds.
DefiningFunction canonical_defining_function(const RadiusProblem& problem);

// The printed equation moved to the form F(x) = 0, verbatim.
DefiningFunction literal_equation(LiteralTag tag, const LiteralParams& params);

// F for the problem's mode.
DefiningFunction defining_function(const RadiusProblem& problem);

struct RootOptions {
  double scan_start = 1e-9;
  double scan_step = 1e-3;
  double bracket_width = 1e-12;
  double search_hi = 1.0;
};

struct RootResult {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool literal = false;
};

// First sign change of F scanning upward from scan_start, refined by
// bisection. Points where F throws DivergenceError or DomainError are treated
// as the end of F's domain.
RootResult minimal_positive_root(const DefiningFunction& f,
                                 const RootOptions& options = {});

RootResult solve(const RadiusProblem& problem, const RootOptions& options = {});

}  // namespace bohr
