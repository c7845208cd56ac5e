#include "bohr/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x < 1.0)) {
    std::ostringstream msg;
    msg << what << ": x = " << x << " outside [0,1)";
    throw DomainError(msg.str());
  }
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// sum_{n>=start} q(k) x^k over k = k0 + s*i, where q(k) = c(k) * k^extra.
double progression_sum(const WeightFamily& family, double x, int extra) {
  if (family.is_empty()) return 0.0;
  std::array<double, 4> g{};
  const auto& c = family.coefficients();
  for (int j = 0; j < 3; ++j) g[j + extra] += c[j];

  const double k0 = family.first_exponent();
  const double s = family.stride();
  const double u = std::pow(x, family.stride());

  double total = 0.0;
  for (int t = 0; t < 4; ++t) {
    double beta = 0.0;
    for (int j = t; j < 4; ++j) {
      if (g[j] == 0.0) continue;
      beta += g[j] * binomial(j, t) * std::pow(k0, j - t);
    }
    if (beta == 0.0) continue;
    total += beta * std::pow(s, t) * closed_form::eulerian_moment(t, u);
  }
  return std::pow(x, family.first_exponent()) * total;
}

}  // namespace

ArgumentPower::ArgumentPower(int m) : m_(m) {
  if (m < 1) throw DomainError("argument power m must be a positive integer");
}

ArgumentPower ArgumentPower::infinite() {
  ArgumentPower p;
  p.infinite_ = true;
  p.m_ = 0;
  return p;
}

double ArgumentPower::of(double x) const {
  if (infinite_) return 0.0;
  return std::pow(x, m_);
}

std::complex<double> ArgumentPower::of(std::complex<double> z) const {
  if (infinite_) return {0.0, 0.0};
  // Polar form keeps |z^m| = |z|^m exactly in the modulus.
  return std::polar(std::pow(std::abs(z), m_), m_ * std::arg(z));
}

std::string ArgumentPower::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(m_);
}

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::Empty: return "empty";
    case WeightKind::Power: return "power";
    case WeightKind::EvenPower: return "even";
    case WeightKind::OddPower: return "odd";
    case WeightKind::StridedPower: return "strided";
    case WeightKind::Linear: return "linear";
    case WeightKind::Affine: return "affine";
    case WeightKind::Quadratic: return "quadratic";
    case WeightKind::CustomPolynomial: return "poly";
  }
  return "unknown";
}

WeightFamily::WeightFamily(WeightKind kind, int start, int stride, int offset,
                           std::array<double, 3> coeffs, double head)
    : kind_(kind),
      start_(start),
      stride_(stride),
      offset_(offset),
      coeffs_(coeffs),
      head_(head) {
  if (start < 1) throw DomainError("weight family start must be >= 1");
  if (stride < 1) throw DomainError("weight family stride must be >= 1");
  if (!(head >= 0.0) || !std::isfinite(head))
    throw DomainError("head weight must be a finite non-negative number");
  for (double c : coeffs)
    if (!std::isfinite(c)) throw DomainError("non-finite weight coefficient");
}

WeightFamily WeightFamily::empty(double head_weight) {
  return {WeightKind::Empty, 1, 1, 0, {0.0, 0.0, 0.0}, head_weight};
}

WeightFamily WeightFamily::power(int start, double head_weight) {
  return {WeightKind::Power, start, 1, 0, {1.0, 0.0, 0.0}, head_weight};
}

WeightFamily WeightFamily::even_power(int start, double head_weight) {
  return {WeightKind::EvenPower, start, 2, 0, {1.0, 0.0, 0.0}, head_weight};
}

WeightFamily WeightFamily::odd_power(int start, double head_weight) {
  return {WeightKind::OddPower, start, 2, 1, {1.0, 0.0, 0.0}, head_weight};
}

WeightFamily WeightFamily::strided_power(int stride, int start,
                                         double head_weight) {
  return {WeightKind::StridedPower, start, stride, 0, {1.0, 0.0, 0.0},
          head_weight};
}

WeightFamily WeightFamily::linear(int start, double head_weight) {
  return {WeightKind::Linear, start, 1, 0, {0.0, 1.0, 0.0}, head_weight};
}

WeightFamily WeightFamily::affine(int start, double head_weight) {
  return {WeightKind::Affine, start, 1, 0, {1.0, 1.0, 0.0}, head_weight};
}

WeightFamily WeightFamily::quadratic(int start, double head_weight) {
  return {WeightKind::Quadratic, start, 1, 0, {0.0, 0.0, 1.0}, head_weight};
}

WeightFamily WeightFamily::polynomial(int start, std::array<double, 3> coeffs,
                                      double head_weight) {
  WeightFamily f{WeightKind::CustomPolynomial, start, 1, 0, coeffs,
                 head_weight};
  const auto [c0, c1, c2] = coeffs;
  if (c2 < 0.0 || (c2 == 0.0 && c1 < 0.0))
    throw DomainError("polynomial weights become negative for large k");
  // c is convex (or linear increasing) on [start, inf): checking every integer
  // up to just past the vertex covers the minimum.
  int last = start;
  if (c2 > 0.0) last = std::max(start, static_cast<int>(std::ceil(-c1 / (2.0 * c2))) + 1);
  for (int k = start; k <= last; ++k)
    if (f.coefficient(k) < 0.0)
      throw DomainError("polynomial weight c(" + std::to_string(k) + ") < 0");
  if (f.coefficient(start) == 0.0 && c1 == 0.0 && c2 == 0.0)
    return empty(head_weight);
  return f;
}

bool WeightFamily::contains(int k) const {
  if (is_empty() || k < first_exponent()) return false;
  return (k + offset_) % stride_ == 0;
}

double WeightFamily::coefficient(int k) const {
  if (kind_ == WeightKind::CustomPolynomial) {
    if (k < start_) return 0.0;
  } else if (!contains(k)) {
    return 0.0;
  }
  const double kk = k;
  return coeffs_[0] + coeffs_[1] * kk + coeffs_[2] * kk * kk;
}

double WeightFamily::weight(int k, double x) const {
  const double c = coefficient(k);
  return c == 0.0 ? 0.0 : c * std::pow(x, k);
}

bool WeightFamily::has_unit_coefficients() const {
  return is_empty() || (coeffs_[0] <= 1.0 && coeffs_[1] == 0.0 && coeffs_[2] == 0.0);
}

WeightFamily WeightFamily::tail_from(int k) const {
  if (is_empty()) return *this;
  WeightFamily f = *this;
  // Smallest n with stride*n - offset >= k.
  const int n = (k + offset_ + stride_ - 1) / stride_;
  f.start_ = std::max(start_, std::max(n, 1));
  return f;
}

WeightFamily WeightFamily::with_head(double head_weight) const {
  WeightFamily f = *this;
  if (!(head_weight >= 0.0)) throw DomainError("head weight must be >= 0");
  f.head_ = head_weight;
  return f;
}

std::string WeightFamily::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  if (kind_ == WeightKind::StridedPower) os << "(stride=" << stride_ << ")";
  if (kind_ == WeightKind::CustomPolynomial)
    os << "(" << coeffs_[0] << "," << coeffs_[1] << "," << coeffs_[2] << ")";
  if (!is_empty()) os << " start=" << start_;
  os << " head=" << head_;
  return os.str();
}

double tail_sum(const WeightFamily& family, double x) {
  require_unit_interval(x, "tail_sum");
  const int n = family.start();
  switch (family.kind()) {
    case WeightKind::Empty:
      return 0.0;
    case WeightKind::Power:
      return closed_form::power_tail(n, x);
    case WeightKind::Linear:
      return closed_form::linear_tail(n, x);
    case WeightKind::Affine:
      return closed_form::affine_tail(n, x);
    case WeightKind::Quadratic:
      return closed_form::quadratic_tail(n, x);
    case WeightKind::EvenPower:
    case WeightKind::OddPower:
    case WeightKind::StridedPower:
      return std::pow(x, family.first_exponent()) /
             (1.0 - std::pow(x, family.stride()));
    case WeightKind::CustomPolynomial:
      return progression_sum(family, x, 0);
  }
  return 0.0;
}

double kernel_ratio(double x, ArgumentPower m) {
  require_unit_interval(x, "kernel_ratio");
  return x / (1.0 - m.of(x));
}

double kernel_sum(const WeightFamily& family, double x, ArgumentPower m) {
  const double u = kernel_ratio(x, m);
  if (family.is_empty()) return 0.0;
  if (u >= 1.0) {
    std::ostringstream msg;
    msg << "kernel_sum diverges: x/(1-x^m) = " << u << " >= 1 at x = " << x;
    throw DivergenceError(msg.str());
  }
  return tail_sum(family, u) / (1.0 + m.of(x));
}

double index_weighted_sum(const WeightFamily& family, double x) {
  require_unit_interval(x, "index_weighted_sum");
  return progression_sum(family, x, 1);
}

namespace closed_form {

double eulerian_moment(int t, double u) {
  const double d = 1.0 - u;
  switch (t) {
    case 0: return 1.0 / d;
    case 1: return u / (d * d);
    case 2: return u * (1.0 + u) / (d * d * d);
    case 3: return u * (1.0 + 4.0 * u + u * u) / (d * d * d * d);
    default: break;
  }
  throw DomainError("eulerian_moment supports t = 0..3");
}

double power_moment_tail(int degree, int start, double x) {
  if (degree < 0 || degree > 3) throw DomainError("moment degree must be 0..3");
  std::array<double, 3> c{};
  if (degree < 3) {
    c[degree] = 1.0;
    return tail_sum(WeightFamily::polynomial(std::max(start, 1), c, 0.0), x);
  }
  return index_weighted_sum(WeightFamily::quadratic(std::max(start, 1), 0.0), x);
}

double power_tail(int start, double x) {
  return std::pow(x, start) / (1.0 - x);
}

double linear_tail(int start, double x) {
  const double n = start;
  const double d = 1.0 - x;
  return std::pow(x, start) * (n * d + x) / (d * d);
}

double affine_tail(int start, double x) {
  const double n = start;
  const double d = 1.0 - x;
  return std::pow(x, start) * (1.0 + n - n * x) / (d * d);
}

double quadratic_tail(int start, double x) {
  const double n = start;
  const double d = 1.0 - x;
  const double num = (x + n) * (x + n) + x + n * n * x * x - 2.0 * n * x * (x + n);
  return std::pow(x, start) * num / (d * d * d);
}

double quadratic_tail_expanded(int start, double x) {
  const double n = start;
  const double d = 1.0 - x;
  const double num =
      n * n - (2.0 * n * n - 2.0 * n - 1.0) * x + (n - 1.0) * (n - 1.0) * x * x;
  return std::pow(x, start) * num / (d * d * d);
}

}  // namespace closed_form

}  // namespace bohr
