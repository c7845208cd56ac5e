#pragma once

#include <optional>
#include <string>

#include "bohr/functions.hpp"
#include "bohr/radius.hpp"
#include "bohr/weights.hpp"

namespace bohr {

// Q(x) = 1 - ((r^m + x)/(1 + x r^m))^p - p (1-r^m)/(1+r^m) (1-x), p in (0,1].
double lemma_Q(double x, double r, double p, int m);
// P(x) = 1 - ((r^m + x)/(1 + x r^m))^p - (p/2) (1-r^m)/(1+r^m) (1-x^2), p in (0,2].
double lemma_P(double x, double r, double p, int m);

// Number of equally spaced points on |z| = r used to maximise each sum.
inline constexpr int kAngleCount = 64;
// Target for the truncated coefficient tail.
inline constexpr double kTailTarget = 1e-12;
inline constexpr int kMaxTruncationOrder = 500;

// One side of a Bohr-Rogosinski type inequality, maximised over the angle
// grid. `value` is the truncated sum (a lower estimate of the true maximum
// over the grid); `tail` bounds the discarded terms.
struct InequalitySum {
  double value = 0.0;
  double tail = 0.0;
  double bound = 0.0;
  // Sum evaluated at z = r (theta = 0).
  double real_axis_value = 0.0;
  int truncation_order = 0;
  bool diverged = false;

  double upper() const { return value + tail; }
  double margin() const { return value - bound; }
};

// A_f = |f(z^m)|^p nu_0(r) + sum_k |a_k| nu_k(r), bound nu_0(r).
// Accepts Moebius, Blaschke and constant members.
InequalitySum sum_A(const AnalyticFunction& f, const WeightFamily& family,
                    double p, double r, ArgumentPower m);

// B_f = |f(z^m)|^p psi_0(r) + sum_k |f^(k)(z^m)|/k! psi_k(r), bound psi_0(r).
// Accepts Moebius, Blaschke and constant members.
InequalitySum sum_B(const AnalyticFunction& f, const WeightFamily& family,
                    double p, double r, ArgumentPower m);

// |g(z^m)| + sum_k |b_k| phi_k(r) with bound |f(0)| + dist(f(0), dOmega).
InequalitySum sum_C(const SubordinationPair& pair, const WeightFamily& family,
                    double r, ArgumentPower m);
InequalitySum sum_D(const SubordinationPair& pair, const WeightFamily& family,
                    double r, ArgumentPower m);

struct SharpnessProbe {
  RadiusProblem problem;
  double root = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  double radius = 0.0;  // root + epsilon
  double sum = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // sum - bound
  // Coefficient of (1 - a) in the extremal expansion (T1/T2 only).
  std::optional<double> first_order;
  bool diverged = false;
};

// Evaluates the extremal of the theorem's sharpness argument at
// r = root + epsilon (a = 1 - delta for T1/T2; Koebe / half-plane map for
// T3/T4). Throws ProbeDomainError outside the admissible range.
SharpnessProbe sharpness_probe(const RadiusProblem& problem, double epsilon,
                               double delta);

enum class Verdict { Consistent, Discrepant, LiteralFailed, CanonicalFailed };
std::string to_string(Verdict v);

inline constexpr double kAuditThreshold = 1e-6;

struct AuditRecord {
  LiteralTag tag = LiteralTag::R1eq;
  LiteralParams params;
  std::optional<double> root_literal;
  std::optional<double> root_canonical;
  // |F_canonical(root_literal)|; +inf when F_canonical is undefined there.
  std::optional<double> cross_residual;
  Verdict verdict = Verdict::Consistent;
  std::string note;
};

AuditRecord audit(LiteralTag tag, const LiteralParams& params);

}  // namespace bohr
