#include "bohr/verify.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bohr/catalog.hpp"
#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_radius(double r, const char* what) {
  if (!(r >= 0.0 && r < 1.0)) {
    std::ostringstream msg;
    msg << what << ": r = " << r << " outside [0,1)";
    throw DomainError(msg.str());
  }
}

Complex grid_point(double r, int j, ArgumentPower m) {
  const double theta = 2.0 * std::numbers::pi * j / kAngleCount;
  return m.of(std::polar(r, theta));
}

// Smallest order K on the doubling ladder 32, 64, ..., 500 whose tail bound
// meets the target.
template <class TailBound>
int choose_order(TailBound&& tail) {
  for (int K = 32;; K *= 2) {
    const int k = std::min(K, kMaxTruncationOrder);
    if (tail(k) <= kTailTarget) return k;
    if (k == kMaxTruncationOrder) break;
  }
  std::ostringstream msg;
  msg << "coefficient tail does not reach " << kTailTarget << " by K = "
      << kMaxTruncationOrder;
  throw TruncationError(msg.str());
}

// sum_{k>=1} (1-a^2) a^{k-1} w_k(t) with t scaled by `scale`:
// (1-a^2)/a * tail(a t / scale) / scale, the Moebius coefficient sum.
double moebius_weighted_sum(double a, const WeightFamily& family, double r, double scale) {
  if (a == 1.0) return 0.0;
  if (a == 0.0) return family.weight(1, r) / (scale * scale);
  const double t = a * r / scale;
  if (t >= 1.0) return kInf;
  return (1.0 - a * a) / (a * scale) * tail_sum(family, t);
}

double head_term(Complex value, double p, double head) {
  return std::pow(std::abs(value), p) * head;
}

}  // namespace

double lemma_Q(double x, double r, double p, int m) {
  if (!(x >= 0.0 && x < 1.0) || !(r >= 0.0 && r < 1.0))
    throw DomainError("lemma_Q: x and r must lie in [0,1)");
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("lemma_Q: p must lie in (0,1]");
  if (m < 1) throw DomainError("lemma_Q: m must be >= 1");
  const double rm = std::pow(r, m);
  return 1.0 - std::pow((rm + x) / (1.0 + x * rm), p) -
         p * (1.0 - rm) / (1.0 + rm) * (1.0 - x);
}

double lemma_P(double x, double r, double p, int m) {
  if (!(x >= 0.0 && x < 1.0) || !(r >= 0.0 && r < 1.0))
    throw DomainError("lemma_P: x and r must lie in [0,1)");
  if (!(p > 0.0 && p <= 2.0)) throw DomainError("lemma_P: p must lie in (0,2]");
  if (m < 1) throw DomainError("lemma_P: m must be >= 1");
  const double rm = std::pow(r, m);
  return 1.0 - std::pow((rm + x) / (1.0 + x * rm), p) -
         0.5 * p * (1.0 - rm) / (1.0 + rm) * (1.0 - x * x);
}

InequalitySum sum_A(const AnalyticFunction& f, const WeightFamily& family, double p,
                    double r, ArgumentPower m) {
  require_radius(r, "sum_A");
  validate(f);
  const double head = family.head_weight();
  InequalitySum out;
  out.bound = head;

  double coefficient_part = 0.0;
  if (const auto* mob = std::get_if<MoebiusExtremal>(&f)) {
    coefficient_part = moebius_weighted_sum(mob->a, family, r, 1.0);
  } else if (std::holds_alternative<BlaschkeProduct>(f) ||
             std::holds_alternative<ConstantFunction>(f)) {
    // |a_k| <= 1 for members of the unit-ball class.
    const double scale = std::holds_alternative<BlaschkeProduct>(f)
                             ? std::abs(std::get<BlaschkeProduct>(f).rotation)
                             : 0.0;
    auto tail = [&](int K) {
      return scale * tail_sum(family.tail_from(K + 1), r);
    };
    const int K = choose_order(tail);
    const auto series = taylor_coefficients(f, K);
    for (int k = 1; k <= K; ++k)
      coefficient_part += std::abs(series.coefficients[k]) * family.weight(k, r);
    out.tail = tail(K);
    out.truncation_order = K;
  } else {
    throw DomainError("sum_A accepts Moebius, Blaschke and constant functions");
  }

  double best = 0.0;
  for (int j = 0; j < kAngleCount; ++j) {
    const double h = head_term(eval(f, grid_point(r, j, m)), p, head);
    if (j == 0) out.real_axis_value = h + coefficient_part;
    best = std::max(best, h);
  }
  out.value = best + coefficient_part;
  out.diverged = !std::isfinite(coefficient_part);
  return out;
}

InequalitySum sum_B(const AnalyticFunction& f, const WeightFamily& family, double p,
                    double r, ArgumentPower m) {
  require_radius(r, "sum_B");
  validate(f);
  const double head = family.head_weight();
  InequalitySum out;
  out.bound = head;

  const auto* mob = std::get_if<MoebiusExtremal>(&f);
  const auto* blaschke = std::get_if<BlaschkeProduct>(&f);
  if (!mob && !blaschke && !std::holds_alternative<ConstantFunction>(f))
    throw DomainError("sum_B accepts Moebius, Blaschke and constant functions");
  if (blaschke && !family.has_unit_coefficients())
    throw DomainError("sum_B with Blaschke products needs unit-coefficient weights");

  double best = -kInf;
  for (int j = 0; j < kAngleCount; ++j) {
    const Complex z0 = grid_point(r, j, m);
    double value = head_term(eval(f, z0), p, head);
    double tail = 0.0;
    if (mob) {
      const Complex d = mob->sign == MoebiusSign::Plus ? 1.0 + mob->a * z0
                                                       : 1.0 - mob->a * z0;
      value += moebius_weighted_sum(mob->a, family, r, std::abs(d));
    } else if (blaschke) {
      int K = 32;
      LocalExpansion local;
      for (;;) {
        local = local_expansion(*blaschke, z0, K, r);
        if (local.tail_bound(K) <= kTailTarget) break;
        if (K == kMaxTruncationOrder) {
          std::ostringstream msg;
          msg << "sum_B: derivative tail does not reach " << kTailTarget
              << " by K = " << kMaxTruncationOrder;
          throw TruncationError(msg.str());
        }
        K = std::min(2 * K, kMaxTruncationOrder);
      }
      for (int k = 1; k <= K; ++k)
        value += std::abs(local.coefficients[k]) * family.weight(k, r);
      tail = local.tail_bound(K);
      out.truncation_order = std::max(out.truncation_order, K);
    }
    if (j == 0) out.real_axis_value = value;
    if (value + tail > best + out.tail) {
      best = value;
      out.tail = tail;
    }
  }
  out.value = best;
  out.diverged = !std::isfinite(best);
  return out;
}

InequalitySum sum_C(const SubordinationPair& pair, const WeightFamily& family, double r,
                    ArgumentPower m) {
  require_radius(r, "sum_C");
  const AnalyticFunction g{pair};
  validate(g);
  const bool koebe = pair.outer == OuterMap::Koebe;
  // |b_k| <= k |f'(0)| for univalent f, <= |f'(0)| for convex f; f'(0) = 1.
  auto tail = [&](int K) {
    const WeightFamily rest = family.tail_from(K + 1);
    return koebe ? index_weighted_sum(rest, r) : tail_sum(rest, r);
  };
  InequalitySum out;
  out.bound = 0.0 + boundary_distance(pair.outer);
  const int K = choose_order(tail);
  const auto series = taylor_coefficients(g, K);
  double coefficient_part = 0.0;
  for (int k = 1; k <= K; ++k)
    coefficient_part += std::abs(series.coefficients[k]) * family.weight(k, r);
  out.tail = tail(K);
  out.truncation_order = K;

  double best = 0.0;
  for (int j = 0; j < kAngleCount; ++j) {
    const double v = std::abs(eval(g, grid_point(r, j, m)));
    if (j == 0) out.real_axis_value = v + coefficient_part;
    best = std::max(best, v);
  }
  out.value = best + coefficient_part;
  return out;
}

InequalitySum sum_D(const SubordinationPair& pair, const WeightFamily& family, double r,
                    ArgumentPower m) {
  return sum_C(pair, family, r, m);
}

SharpnessProbe sharpness_probe(const RadiusProblem& problem, double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 0.1))
    throw DomainError("sharpness probe epsilon must lie in (0, 0.1]");
  if (!(delta >= 0.0 && delta <= 0.1))
    throw DomainError("sharpness probe delta must lie in [0, 0.1]");

  SharpnessProbe probe;
  probe.problem = problem;
  probe.problem.literal.reset();
  probe.epsilon = epsilon;
  probe.delta = delta;
  probe.root = solve(probe.problem).root;
  probe.radius = probe.root + epsilon;
  const double r = probe.radius;
  if (r >= 1.0) throw ProbeDomainError("root + epsilon leaves the unit interval");

  const WeightFamily& family = problem.family;
  const ArgumentPower m = problem.m;
  const double rho = m.of(r);
  const double a = 1.0 - delta;
  const double head = family.head_weight();

  InequalitySum s;
  switch (problem.theorem) {
    case Theorem::T1:
      s = sum_A(MoebiusExtremal{a, MoebiusSign::Plus}, family, problem.p, r, m);
      probe.first_order =
          2.0 * tail_sum(family, r) - problem.p * (1.0 - rho) / (1.0 + rho) * head;
      break;
    case Theorem::T2: {
      const double u = kernel_ratio(r, m);
      if (u >= 1.0)
        throw ProbeDomainError("root + epsilon leaves the kernel-admissible range");
      s = sum_B(MoebiusExtremal{a, MoebiusSign::Minus}, family, problem.p, r, m);
      probe.first_order = 2.0 / (1.0 - rho) * tail_sum(family, u) -
                          problem.p * (1.0 + rho) / (1.0 - rho) * head;
      break;
    }
    case Theorem::T3:
      s = sum_C({OuterMap::Koebe, BlaschkeProduct{{Complex{}}, Complex{1.0}}}, family, r, m);
      break;
    case Theorem::T4:
      s = sum_D({OuterMap::HalfPlane, BlaschkeProduct{{Complex{}}, Complex{1.0}}}, family,
                r, m);
      break;
  }
  probe.sum = s.value;
  probe.bound = s.bound;
  probe.diverged = s.diverged;
  probe.margin = s.diverged ? kInf : s.value - s.bound;
  return probe;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent: return "consistent";
    case Verdict::Discrepant: return "discrepant";
    case Verdict::LiteralFailed: return "literal-failed";
    case Verdict::CanonicalFailed: return "canonical-failed";
  }
  return "?";
}

AuditRecord audit(LiteralTag tag, const LiteralParams& params) {
  AuditRecord rec;
  rec.tag = tag;
  rec.params = params;
  std::ostringstream note;

  const RadiusProblem canonical = canonical_problem(tag, params);
  if (canonical.theorem == Theorem::T1 && canonical.p > 1.0)
    note << "p > 1 lies outside the T1 range (0,1]; canonical root uses p in (0,2]. ";

  try {
    rec.root_literal = solve(literal_problem(tag, params)).root;
  } catch (const Error& e) {
    note << "literal: " << e.what() << ". ";
  }
  try {
    rec.root_canonical = solve(canonical).root;
  } catch (const Error& e) {
    note << "canonical: " << e.what() << ". ";
  }

  if (rec.root_literal) {
    try {
      rec.cross_residual = std::abs(canonical_defining_function(canonical)(*rec.root_literal));
    } catch (const Error&) {
      rec.cross_residual = kInf;
    }
  }

  if (!rec.root_literal)
    rec.verdict = Verdict::LiteralFailed;
  else if (!rec.root_canonical)
    rec.verdict = Verdict::CanonicalFailed;
  else if (std::abs(*rec.root_literal - *rec.root_canonical) > kAuditThreshold)
    rec.verdict = Verdict::Discrepant;
  else
    rec.verdict = Verdict::Consistent;

  rec.note = note.str();
  while (!rec.note.empty() && rec.note.back() == ' ') rec.note.pop_back();
  return rec;
}

}  // namespace bohr
