#pragma once

#include <array>
#include <complex>
#include <string>

namespace bohr {

// The exponent m in f(z^m). The limit mode m -> infinity maps every point of
// the open disk to 0.
class ArgumentPower {
 public:
  explicit ArgumentPower(int m);
  static ArgumentPower infinite();

  bool is_infinite() const { return infinite_; }
  // Only meaningful when !is_infinite().
  int value() const { return m_; }

  // x^m, or 0 in the limit mode. Requires |x| < 1 in the limit mode.
  double of(double x) const;
  std::complex<double> of(std::complex<double> z) const;

  std::string to_string() const;

  friend bool operator==(const ArgumentPower&, const ArgumentPower&) = default;

 private:
  ArgumentPower() = default;
  int m_ = 1;
  bool infinite_ = false;
};

enum class WeightKind {
  Empty,             // no tail terms at all (the N -> infinity limit)
  Power,             // x^k, k >= N
  EvenPower,         // x^{2n}, n >= start
  OddPower,          // x^{2n-1}, n >= start
  StridedPower,      // x^{s n}, n >= start
  Linear,            // k x^k, k >= N
  Affine,            // (k+1) x^k, k >= N
  Quadratic,         // k^2 x^k, k >= N
  CustomPolynomial,  // (c0 + c1 k + c2 k^2) x^k, k >= N
};

std::string to_string(WeightKind kind);

// Non-negative weight sequence w_k(x) = c(k) x^k supported on the exponents
// k = stride * n - offset, n >= start. The head weight is the constant
// zeroth weight (nu_0 / psi_0); subordination theorems ignore it.
class WeightFamily {
 public:
  static WeightFamily empty(double head_weight = 1.0);
  static WeightFamily power(int start, double head_weight = 1.0);
  static WeightFamily even_power(int start = 1, double head_weight = 1.0);
  static WeightFamily odd_power(int start = 1, double head_weight = 1.0);
  static WeightFamily strided_power(int stride, int start = 1,
                                    double head_weight = 1.0);
  static WeightFamily linear(int start, double head_weight = 1.0);
  static WeightFamily affine(int start, double head_weight = 1.0);
  static WeightFamily quadratic(int start, double head_weight = 1.0);
  // c(k) = c0 + c1 k + c2 k^2; must be non-negative for every k >= start.
  static WeightFamily polynomial(int start, std::array<double, 3> coeffs,
                                 double head_weight = 1.0);

  WeightKind kind() const { return kind_; }
  int start() const { return start_; }
  int stride() const { return stride_; }
  int offset() const { return offset_; }
  double head_weight() const { return head_; }
  const std::array<double, 3>& coefficients() const { return coeffs_; }

  bool is_empty() const { return kind_ == WeightKind::Empty; }
  // Smallest exponent carrying a weight.
  int first_exponent() const { return stride_ * start_ - offset_; }
  bool contains(int k) const;
  // c(k) when k is on the progression, else 0.
  double coefficient(int k) const;
  // w_k(x).
  double weight(int k, double x) const;
  // True when c(k) <= 1 everywhere (pure power patterns).
  bool has_unit_coefficients() const;

  // Same family restricted to exponents >= k.
  WeightFamily tail_from(int k) const;
  WeightFamily with_head(double head_weight) const;

  std::string describe() const;

 private:
  WeightFamily(WeightKind kind, int start, int stride, int offset,
               std::array<double, 3> coeffs, double head);

  WeightKind kind_;
  int start_;
  int stride_;
  int offset_;
  std::array<double, 3> coeffs_;
  double head_;
};

// Sum over the family's tail, sum_{k} w_k(x), in closed form. x in [0,1).
double tail_sum(const WeightFamily& family, double x);

// sum_k (1+x^m)^{k-1} (1-x^{2m})^{-k} w_k(x), which equals
// tail_sum(family, u) / (1 + x^m) with u = x / (1 - x^m).
// Throws DivergenceError when u >= 1.
double kernel_sum(const WeightFamily& family, double x, ArgumentPower m);

// x / (1 - x^m), the ratio driving kernel_sum.
double kernel_ratio(double x, ArgumentPower m);

// sum_k k w_k(x) in closed form.
double index_weighted_sum(const WeightFamily& family, double x);

namespace closed_form {

// sum_{i>=0} i^t u^i for t = 0..3.
double eulerian_moment(int t, double u);
// sum_{k>=start} k^degree x^k for degree = 0..3.
double power_moment_tail(int degree, int start, double x);

double power_tail(int start, double x);
double linear_tail(int start, double x);
double affine_tail(int start, double x);
// Numerator as printed: (x+N)^2 + x + N^2 x^2 - 2 N x (x+N).
double quadratic_tail(int start, double x);
// Expanded numerator: N^2 - (2N^2 - 2N - 1) x + (N-1)^2 x^2.
double quadratic_tail_expanded(int start, double x);

}  // namespace closed_form

}  // namespace bohr
