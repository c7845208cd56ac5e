#include "bohr/radius.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr std::array<std::string_view, kLiteralTagCount> kTagNames = {
    "R1eq", "R2eq", "R3eq",  "R4eq",  "R5eq",  "R6eq",  "R7eq",  "R8eq",
    "R9eq", "R10eq", "R11eq", "R12eq", "R13eq", "R14eq", "R15eq", "R16eq"};

void require_unit_interval(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    std::ostringstream msg;
    msg << "defining function evaluated at x = " << x << " outside [0,1)";
    throw DomainError(msg.str());
  }
}

}  // namespace

std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
  }
  return "?";
}

std::optional<Theorem> parse_theorem(std::string_view s) {
  if (s == "T1") return Theorem::T1;
  if (s == "T2") return Theorem::T2;
  if (s == "T3") return Theorem::T3;
  if (s == "T4") return Theorem::T4;
  return std::nullopt;
}

std::string to_string(LiteralTag tag) {
  return std::string(kTagNames[static_cast<int>(tag)]);
}

std::optional<LiteralTag> parse_literal_tag(std::string_view s) {
  for (int i = 0; i < kLiteralTagCount; ++i)
    if (kTagNames[i] == s) return static_cast<LiteralTag>(i);
  return std::nullopt;
}

Theorem theorem_of(LiteralTag tag) {
  const int i = static_cast<int>(tag);
  if (i <= static_cast<int>(LiteralTag::R7eq)) return Theorem::T1;
  if (i <= static_cast<int>(LiteralTag::R10eq)) return Theorem::T2;
  if (i <= static_cast<int>(LiteralTag::R13eq)) return Theorem::T3;
  return Theorem::T4;
}

LiteralParams RadiusProblem::literal_params() const {
  LiteralParams lp;
  lp.p = p;
  lp.m = m.is_infinite() ? 0 : m.value();
  lp.N = (literal == LiteralTag::R7eq) ? family.stride() : family.start();
  return lp;
}

void validate(const RadiusProblem& problem) {
  const double p = problem.p;
  switch (problem.theorem) {
    case Theorem::T1: {
      const double hi = (problem.allow_extended_p || problem.literal) ? 2.0 : 1.0;
      if (!(p > 0.0 && p <= hi)) {
        std::ostringstream msg;
        msg << "T1 requires p in (0," << hi << "], got " << p;
        throw DomainError(msg.str());
      }
      break;
    }
    case Theorem::T2:
      if (!(p > 0.0 && p <= 2.0))
        throw DomainError("T2 requires p in (0,2], got " + std::to_string(p));
      break;
    case Theorem::T3:
    case Theorem::T4:
      break;
  }
  if (problem.literal) {
    if (theorem_of(*problem.literal) != problem.theorem)
      throw DomainError(to_string(*problem.literal) + " is an instance of " +
                        to_string(theorem_of(*problem.literal)) + ", not " +
                        to_string(problem.theorem));
    if (problem.m.is_infinite())
      throw DomainError("literal equations need a finite m");
  }
}

DefiningFunction canonical_defining_function(const RadiusProblem& problem) {
  validate(problem);
  const WeightFamily family = problem.family;
  const ArgumentPower m = problem.m;
  const double p = problem.p;
  const double head = family.head_weight();

  switch (problem.theorem) {
    case Theorem::T1:
      return [=](double x) {
        require_unit_interval(x);
        const double rho = m.of(x);
        return head - (2.0 / p) * ((1.0 + rho) / (1.0 - rho)) * tail_sum(family, x);
      };
    case Theorem::T2:
      return [=](double x) {
        require_unit_interval(x);
        return head - (2.0 / p) * kernel_sum(family, x, m);
      };
    case Theorem::T3:
      return [=](double x) {
        require_unit_interval(x);
        const double rho = m.of(x);
        return 0.25 - index_weighted_sum(family, x) - rho / ((1.0 - rho) * (1.0 - rho));
      };
    case Theorem::T4:
      return [=](double x) {
        require_unit_interval(x);
        const double rho = m.of(x);
        return 0.5 - tail_sum(family, x) - rho / (1.0 - rho);
      };
  }
  throw DomainError("unknown theorem");
}

DefiningFunction literal_equation(LiteralTag tag, const LiteralParams& params) {
  const double p = params.p;
  const int m = params.m;
  const int N = params.N;
  const double n = N;
  if (m < 1) throw DomainError("literal equations need m >= 1");
  if (N < 1) throw DomainError("literal equations need N >= 1");

  auto wrap = [](auto body) -> DefiningFunction {
    return [body](double x) {
      require_unit_interval(x);
      return body(x);
    };
  };
  using std::pow;

  switch (tag) {
    case LiteralTag::R1eq:
      return wrap([=](double x) {
        return 2 * pow(x, N) * (1 + pow(x, m)) - p * (1 - x) * (1 - pow(x, m));
      });
    case LiteralTag::R2eq:
      return wrap([=](double x) {
        return 2 * x * x * (1 + pow(x, m)) - p * (1 - x * x) * (1 - pow(x, m));
      });
    case LiteralTag::R3eq:
      return wrap([=](double x) {
        return 2 * x * (1 + pow(x, m)) - p * (1 - x * x) * (1 - pow(x, m));
      });
    case LiteralTag::R4eq:
      return wrap([=](double x) {
        return 2 * pow(x, N) * (1 + n - n * x) * (1 + pow(x, m)) -
               p * (1 - x) * (1 - x) * (1 - pow(x, m));
      });
    case LiteralTag::R5eq:
      return wrap([=](double x) {
        return 2 * pow(x, N) * (n * (1 - x) + x) * (1 + pow(x, m)) - p * (1 - pow(x, m));
      });
    case LiteralTag::R6eq:
      return wrap([=](double x) {
        const double bracket =
            (x + n) * (x + n) + x + n * n * x * x - 2 * n * x * (x + n);
        return pow(x, N) * bracket * (1 + pow(x, m)) -
               p * (1 - pow(x, m)) * pow(1 - x, 3);
      });
    case LiteralTag::R7eq:
      return wrap([=](double x) {
        return 2 * pow(x, N) * (1 + x) - (1 - x) * (1 - pow(x, N));
      });
    case LiteralTag::R8eq:
      return wrap([=](double x) {
        return 2 * pow(x, N) - p * (1 - pow(x, 2 * m)) * (1 - x - pow(x, m));
      });
    case LiteralTag::R9eq:
      return wrap([=](double x) {
        const double xm = pow(x, m);
        return 2 * pow(x, 2 * N) -
               p * (1 + xm) * pow(1 - xm, 2 * (N - 1)) * ((1 - xm) * (1 - xm) - x * x);
      });
    case LiteralTag::R10eq:
      return wrap([=](double x) {
        const double xm = pow(x, m);
        return 2 * pow(x, 2 * N - 1) -
               p * (1 + xm) * pow(1 - xm, 2 * N - 3) * ((1 - xm) * (1 - xm) - x * x);
      });
    case LiteralTag::R11eq:
      return wrap([=](double x) {
        const double xm = pow(x, m);
        const double ratio = (1 - xm) / (1 - x);
        return 4 * xm - (1 - xm) * (1 - xm) +
               4 * pow(x, N) * (n * (1 - x) + x) * ratio * ratio;
      });
    case LiteralTag::R12eq:
      return wrap([=](double x) {
        const double xm = pow(x, m);
        return 2 * x * x / pow(1 - x * x, 2) + xm / pow(1 - xm, 2) - 0.25;
      });
    case LiteralTag::R13eq:
      return wrap([=](double x) {
        const double xm = pow(x, m);
        return pow(x, 3) * (3 - x * x) / pow(1 - x * x, 2) + xm / pow(1 - xm, 2) - 0.25;
      });
    case LiteralTag::R14eq:
      return wrap([=](double x) {
        const double xm = pow(x, m);
        return 3 * xm - 1 + 2 * pow(x, N) * ((1 - xm) / (1 - x));
      });
    case LiteralTag::R15eq:
      return wrap([=](double x) {
        const double xm = pow(x, m);
        return x * x / (1 - x * x) + xm / (1 - xm) - 0.5;
      });
    case LiteralTag::R16eq:
      return wrap([=](double x) {
        const double xm = pow(x, m);
        return x / (1 - x * x) + xm / (1 - xm) - 0.5;
      });
  }
  throw DomainError("unknown literal tag");
}

DefiningFunction defining_function(const RadiusProblem& problem) {
  if (!problem.literal) return canonical_defining_function(problem);
  validate(problem);
  return literal_equation(*problem.literal, problem.literal_params());
}

RootResult minimal_positive_root(const DefiningFunction& f, const RootOptions& options) {
  if (!(options.scan_step > 0.0) || !(options.bracket_width > 0.0))
    throw DomainError("scan step and bracket width must be positive");
  if (!(options.search_hi <= 1.0) || !(options.scan_start < options.search_hi))
    throw DomainError("search interval must satisfy scan_start < search_hi <= 1");

  // nullopt marks the end of F's domain.
  auto try_eval = [&](double x) -> std::optional<double> {
    try {
      const double v = f(x);
      if (std::isnan(v)) return std::nullopt;
      return v;
    } catch (const DivergenceError&) {
      return std::nullopt;
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };

  const auto f0 = try_eval(options.scan_start);
  if (!f0)
    throw UndefinedRegionError("defining function undefined at the scan start");
  RootResult result;
  if (*f0 == 0.0) {
    result.root = result.lo = result.hi = options.scan_start;
    return result;
  }
  const bool positive = *f0 > 0.0;
  // True while F is defined and keeps the initial sign.
  auto keeps_sign = [&](const std::optional<double>& v) {
    return v && *v != 0.0 && ((*v > 0.0) == positive);
  };

  double lo = options.scan_start;
  double hi = lo;
  bool bracketed = false;
  for (long i = 1;; ++i) {
    const double x = options.scan_start + static_cast<double>(i) * options.scan_step;
    if (x >= options.search_hi) break;
    if (!keeps_sign(try_eval(x))) {
      hi = x;
      bracketed = true;
      break;
    }
    lo = x;
  }
  if (!bracketed) {
    std::ostringstream msg;
    msg << "no sign change on [" << options.scan_start << ", " << options.search_hi << ")";
    throw NoSignChangeError(msg.str());
  }

  int iterations = 0;
  while (hi - lo > options.bracket_width && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (keeps_sign(try_eval(mid)))
      lo = mid;
    else
      hi = mid;
    ++iterations;
  }

  const auto f_hi = try_eval(hi);
  if (!f_hi) {
    std::ostringstream msg;
    msg << "domain of F ends near x = " << hi << " before any sign change";
    throw UndefinedRegionError(msg.str());
  }
  result.lo = lo;
  result.hi = hi;
  result.root = 0.5 * (lo + hi);
  const auto f_root = try_eval(result.root);
  result.residual = f_root ? std::abs(*f_root) : std::abs(*f_hi);
  result.iterations = iterations;
  return result;
}

RootResult solve(const RadiusProblem& problem, const RootOptions& options) {
  RootResult r = minimal_positive_root(defining_function(problem), options);
  r.literal = problem.literal.has_value();
  return r;
}

}  // namespace bohr
