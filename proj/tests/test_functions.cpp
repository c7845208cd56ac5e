#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohr/errors.hpp"
#include "bohr/functions.hpp"
#include "bohr/parallel.hpp"

using namespace bohr;

namespace {

double dist(Complex a, Complex b) { return std::abs(a - b); }

// |f''(z0)|/2 from a five-point central difference along the real direction.
double second_derivative_fd(const AnalyticFunction& f, Complex z0) {
  const double h = 1e-3;
  const Complex d2 = (-eval(f, z0 + 2.0 * h) + 16.0 * eval(f, z0 + h) - 30.0 * eval(f, z0) +
                      16.0 * eval(f, z0 - h) - eval(f, z0 - 2.0 * h)) /
                     (12.0 * h * h);
  return std::abs(d2) / 2.0;
}

}  // namespace

TEST_CASE("Moebius coefficients") {
  const auto s = taylor_coefficients(MoebiusExtremal{0.5, MoebiusSign::Plus}, 3);
  const double expected[] = {0.5, 0.75, -0.375, 0.1875};
  for (int k = 0; k <= 3; ++k) CHECK(dist(s.coefficients[k], expected[k]) < 1e-15);

  const auto h = taylor_coefficients(MoebiusExtremal{0.5, MoebiusSign::Minus}, 3);
  const double expected_h[] = {0.5, -0.75, -0.375, -0.1875};
  for (int k = 0; k <= 3; ++k) CHECK(dist(h.coefficients[k], expected_h[k]) < 1e-15);
}

TEST_CASE("Koebe and half-plane map") {
  const auto k = taylor_coefficients(KoebeFunction{}, 4);
  for (int i = 0; i <= 4; ++i) CHECK(dist(k.coefficients[i], double(i)) < 1e-15);
  CHECK(dist(eval(KoebeFunction{}, 0.5), 2.0) < 1e-15);
  CHECK(dist(eval(HalfPlaneMap{}, 0.5), 1.0) < 1e-15);
  CHECK(boundary_distance(OuterMap::Koebe) == 0.25);
  CHECK(boundary_distance(OuterMap::HalfPlane) == 0.5);
}

TEST_CASE("identity Blaschke product") {
  const BlaschkeProduct id{{Complex{}}, Complex{1.0, 0.0}};
  const auto s = taylor_coefficients(id, 5);
  CHECK(dist(s.coefficients[0], 0.0) < 1e-15);
  CHECK(dist(s.coefficients[1], 1.0) < 1e-15);
  for (int i = 2; i <= 5; ++i) CHECK(std::abs(s.coefficients[i]) < 1e-15);
  CHECK(dist(eval(id, Complex(0.3, -0.2)), Complex(0.3, -0.2)) < 1e-15);
}

TEST_CASE("Horner on the truncated series matches eval") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const AnalyticFunction f = random_blaschke(rng);
    const auto s = taylor_coefficients(f, 200);
    for (double r : {0.1, 0.5, 0.8}) {
      const Complex z = std::polar(r, 0.7 * trial);
      CHECK(dist(s.horner(z), eval(f, z)) <= s.tail_bound(r) + 1e-13);
    }
  }
}

TEST_CASE("derivatives: closed form, quadrature and finite differences agree") {
  const BlaschkeProduct b{{Complex(0.3, 0.0), Complex(0.0, -0.2)}, Complex{1.0, 0.0}};
  const Complex z0 = 0.1;
  const double closed = kth_derivative_magnitude(b, z0, 2);
  CHECK(std::abs(closed - second_derivative_fd(b, z0)) <= 1e-6);
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(std::abs(kth_derivative_magnitude(b, z0, k) - contour_derivative_magnitude(b, z0, k)) <
          1e-10);
  }
  const MoebiusExtremal g{0.7, MoebiusSign::Plus};
  for (int k = 1; k <= 6; ++k) {
    const Complex z(0.2, 0.4);
    // |g^(k)(z)|/k! = (1-a^2) a^{k-1} / |1 + a z|^{k+1}
    const double expected = (1 - 0.49) * std::pow(0.7, k - 1) / std::pow(std::abs(1.0 + 0.7 * z), k + 1);
    CHECK(kth_derivative_magnitude(g, z, k) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("contour quadrature does not alias at high order") {
  const BlaschkeProduct b{{Complex(0.2, 0.1), Complex(-0.4, 0.3)}, Complex(0.0, 1.0)};
  const Complex z0 = 0.25;
  for (int k = 1; k <= 24; ++k) {
    CAPTURE(k);
    const double exact = kth_derivative_magnitude(b, z0, k);
    // Roundoff in the raw coefficient is amplified by rho^-k, rho = 0.375.
    const double tol = 1e-10 * std::pow(0.375, -k);
    CHECK(std::abs(contour_derivative_magnitude(b, z0, k) - exact) <= tol);
  }
}

TEST_CASE("local expansion majorant bounds the coefficients") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = random_blaschke(rng);
    const Complex z0 = std::polar(0.4, 1.3 * trial);
    const double t = 0.3;
    const auto e = local_expansion(b, z0, 30, t);
    for (int k = 0; k <= 30; ++k) CHECK(std::abs(e.coefficients[k]) <= e.majorant[k] + 1e-14);
    CHECK(dist(e.coefficients[0], eval(b, z0)) < 1e-14);
    CHECK(std::abs(e.coefficients[3]) == doctest::Approx(kth_derivative_magnitude(b, z0, 3)));
    CHECK(e.tail_bound(30) >= 0.0);
  }
}

TEST_CASE("Schwarz-Pick at the origin for random products") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto b = random_blaschke(rng);
    const auto s = taylor_coefficients(b, 1);
    CHECK(std::abs(s.coefficients[1]) <= 1.0 - std::norm(s.coefficients[0]) + 1e-14);
    for (const auto& z : b.zeros) CHECK(std::abs(eval(b, z)) < 1e-14);
    CHECK(std::abs(b.rotation) == doctest::Approx(1.0));
  }
}

TEST_CASE("subordination pairs obey the growth bounds") {
  std::mt19937_64 rng(9);
  BlaschkeSampling sampling;
  sampling.zero_at_origin = true;
  for (int trial = 0; trial < 50; ++trial) {
    const auto inner = random_blaschke(rng, sampling);
    const auto koebe = taylor_coefficients(SubordinationPair{OuterMap::Koebe, inner}, 40);
    const auto half = taylor_coefficients(SubordinationPair{OuterMap::HalfPlane, inner}, 40);
    CHECK(std::abs(koebe.coefficients[0]) < 1e-14);
    for (int k = 1; k <= 40; ++k) {
      CHECK(std::abs(koebe.coefficients[k]) <= k + 1e-9);
      CHECK(std::abs(half.coefficients[k]) <= 1.0 + 1e-9);
    }
    const Complex z = std::polar(0.6, 0.3 * trial);
    CHECK(dist(eval(SubordinationPair{OuterMap::Koebe, inner}, z),
               eval(KoebeFunction{}, eval(inner, z))) < 1e-12);
  }
}

TEST_CASE("sampling is reproducible and validated") {
  auto a = cell_rng(42, 1, 2);
  auto b = cell_rng(42, 1, 2);
  const auto pa = random_blaschke(a);
  const auto pb = random_blaschke(b);
  CHECK(pa.zeros == pb.zeros);
  CHECK(pa.rotation == pb.rotation);
  auto c = cell_rng(42, 2, 1);
  CHECK(c() != cell_rng(42, 1, 2)());
  CHECK_THROWS_AS(validate(BlaschkeProduct{{Complex(1.0, 0.0)}, 1.0}), DomainError);
  CHECK_THROWS_AS(validate(MoebiusExtremal{1.5, MoebiusSign::Plus}), DomainError);
  CHECK_THROWS_AS(eval(KoebeFunction{}, Complex(1.0, 0.0)), DomainError);
}
