#include <doctest.h>

#include <cmath>

#include "bohr/errors.hpp"
#include "bohr/weights.hpp"

using namespace bohr;

namespace {

// Brute-force partial sum of w_k(x) over the family's exponents.
double direct_tail(const WeightFamily& f, double x, int terms = 100000) {
  double s = 0.0;
  for (int k = 0; k < terms; ++k) s += f.weight(k, x);
  return s;
}

double direct_index_weighted(const WeightFamily& f, double x, int terms = 100000) {
  double s = 0.0;
  for (int k = 0; k < terms; ++k) s += k * f.weight(k, x);
  return s;
}

// sum_k (1+x^m)^{k-1} (1-x^{2m})^{-k} w_k(x), summed literally.
double direct_kernel(const WeightFamily& f, double x, int m, int terms) {
  const double xm = std::pow(x, m);
  double s = 0.0;
  for (int k = 1; k < terms; ++k) {
    const double w = f.weight(k, x);
    if (w == 0.0) continue;
    s += std::pow(1.0 + xm, k - 1) / std::pow(1.0 - xm * xm, k) * w;
  }
  return s;
}

}  // namespace

TEST_CASE("argument power") {
  CHECK(ArgumentPower(3).of(0.5) == doctest::Approx(0.125));
  CHECK(ArgumentPower::infinite().of(0.999) == 0.0);
  CHECK(ArgumentPower::infinite().to_string() == "inf");
  CHECK_THROWS_AS(ArgumentPower(0), DomainError);
  const auto z = ArgumentPower(2).of(std::complex<double>(0.0, 0.5));
  CHECK(z.real() == doctest::Approx(-0.25));
  CHECK(std::abs(z.imag()) < 1e-15);
}

TEST_CASE("closed-form tails match partial sums") {
  const double xs[] = {0.0, 0.1, 0.3, 0.5, 0.7, 0.9};
  const WeightFamily families[] = {
      WeightFamily::power(1),          WeightFamily::power(5),
      WeightFamily::even_power(1),     WeightFamily::even_power(3),
      WeightFamily::odd_power(1),      WeightFamily::odd_power(4),
      WeightFamily::strided_power(3),  WeightFamily::linear(5),
      WeightFamily::affine(10),        WeightFamily::quadratic(2),
      WeightFamily::polynomial(3, {0.5, 2.0, 1.0}),
  };
  for (const auto& f : families)
    for (double x : xs) {
      CAPTURE(f.describe());
      CAPTURE(x);
      const double direct = direct_tail(f, x);
      CHECK(std::abs(tail_sum(f, x) - direct) <= 1e-10 * std::max(1.0, direct));
      const double iw = direct_index_weighted(f, x);
      CHECK(std::abs(index_weighted_sum(f, x) - iw) <= 1e-10 * std::max(1.0, iw));
    }
}

TEST_CASE("named tails") {
  CHECK(tail_sum(WeightFamily::power(1), 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tail_sum(WeightFamily::empty(), 0.7) == 0.0);
  for (int N : {1, 2, 5, 10})
    for (double x : {0.2, 0.6}) {
      CHECK(closed_form::quadratic_tail(N, x) ==
            doctest::Approx(closed_form::quadratic_tail_expanded(N, x)).epsilon(1e-13));
      CHECK(closed_form::linear_tail(N, x) ==
            doctest::Approx(closed_form::power_moment_tail(1, N, x)).epsilon(1e-13));
      CHECK(closed_form::affine_tail(N, x) ==
            doctest::Approx(closed_form::linear_tail(N, x) + closed_form::power_tail(N, x))
                .epsilon(1e-13));
    }
}

TEST_CASE("kernel sum") {
  // N = 5, m = 1, x = 0.3: literal kernel series, 200 terms.
  const auto f = WeightFamily::power(5);
  CHECK(std::abs(kernel_sum(f, 0.3, ArgumentPower(1)) - direct_kernel(f, 0.3, 1, 200)) < 1e-13);
  for (int m : {1, 2, 4})
    for (double x : {0.1, 0.25, 0.4}) {
      const auto g = WeightFamily::even_power(2);
      CAPTURE(m);
      CAPTURE(x);
      CHECK(kernel_sum(g, x, ArgumentPower(m)) ==
            doctest::Approx(direct_kernel(g, x, m, 4000)).epsilon(1e-11));
      // kernel * (1 + x^m) = tail(u).
      const double u = kernel_ratio(x, ArgumentPower(m));
      CHECK(kernel_sum(g, x, ArgumentPower(m)) * (1.0 + std::pow(x, m)) ==
            doctest::Approx(tail_sum(g, u)).epsilon(1e-13));
    }
  CHECK_THROWS_AS(kernel_sum(f, 0.5, ArgumentPower(1)), DivergenceError);
  CHECK_THROWS_AS(kernel_sum(f, 0.7, ArgumentPower(1)), DivergenceError);
  CHECK_NOTHROW(kernel_sum(f, 0.6, ArgumentPower(2)));
}

TEST_CASE("index-weighted even tail at the printed root") {
  // sum_n 2n x^{2n} = 2x^2/(1-x^2)^2; at 0.14813 this plus x/(1-x)^2 is ~1/4.
  const double x = 0.14813;
  const double s = index_weighted_sum(WeightFamily::even_power(1), x);
  CHECK(s == doctest::Approx(2 * x * x / std::pow(1 - x * x, 2)).epsilon(1e-13));
  CHECK(std::abs(s + x / std::pow(1 - x, 2) - 0.25) < 5e-5);
}

TEST_CASE("tails are increasing in x and decreasing in N") {
  for (int N = 1; N < 12; ++N) {
    double prev = -1.0;
    for (int i = 0; i < 99; ++i) {
      const double x = 0.01 * i;
      const double v = tail_sum(WeightFamily::affine(N), x);
      CHECK(v >= prev);
      prev = v;
      CHECK(tail_sum(WeightFamily::power(N + 1), x) <= tail_sum(WeightFamily::power(N), x));
    }
  }
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(WeightFamily::power(0), DomainError);
  CHECK_THROWS_AS(WeightFamily::polynomial(1, {-5.0, 1.0, 0.0}), DomainError);
  CHECK_NOTHROW(WeightFamily::polynomial(5, {-5.0, 1.0, 0.0}));
  CHECK_THROWS_AS(tail_sum(WeightFamily::power(1), 1.0), DomainError);
  const auto odd = WeightFamily::odd_power(2);
  CHECK(odd.first_exponent() == 3);
  CHECK(odd.contains(5));
  CHECK_FALSE(odd.contains(4));
  CHECK_FALSE(odd.contains(1));
  CHECK(odd.tail_from(6).first_exponent() == 7);
  CHECK(WeightFamily::quadratic(1).coefficient(4) == 16.0);
  CHECK(WeightFamily::power(3).has_unit_coefficients());
  CHECK_FALSE(WeightFamily::linear(3).has_unit_coefficients());
}
