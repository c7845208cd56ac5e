#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

enum class MoebiusSign {
  Plus,   // g(z) = (a + z) / (1 + a z)
  Minus,  // h(z) = (a - z) / (1 - a z)
};

// One-parameter disk automorphism used by the sharpness arguments. a = 1 is
// accepted as the degenerate constant map 1.
struct MoebiusExtremal {
  double a = 0.0;
  MoebiusSign sign = MoebiusSign::Plus;
};

// rotation * prod_j (z - z_j) / (1 - conj(z_j) z). |rotation| <= 1, so
// scaled products (including the zero function) are allowed.
struct BlaschkeProduct {
  std::vector<Complex> zeros;
  Complex rotation{1.0, 0.0};

  int degree() const { return static_cast<int>(zeros.size()); }
};

// k(z) = z / (1 - z)^2.
struct KoebeFunction {};
// z / (1 - z), a convex univalent map onto Re w > -1/2.
struct HalfPlaneMap {};

struct ConstantFunction {
  Complex value{0.0, 0.0};
};

enum class OuterMap { Koebe, HalfPlane };

// g = outer o inner with inner(0) = 0, so g is subordinate to outer.
struct SubordinationPair {
  OuterMap outer = OuterMap::Koebe;
  BlaschkeProduct inner;
};

using AnalyticFunction =
    std::variant<ConstantFunction, MoebiusExtremal, BlaschkeProduct,
                 KoebeFunction, HalfPlaneMap, SubordinationPair>;

// Taylor coefficients c_0..c_K about the origin, with a coefficient growth
// bound |c_k| <= growth_scale * k^growth_degree valid for every k.
struct CoefficientSeries {
  std::vector<Complex> coefficients;
  double growth_scale = 1.0;
  int growth_degree = 0;

  int truncation_order() const {
    return static_cast<int>(coefficients.size()) - 1;
  }
  // Bound on sum_{k>K} |c_k| r^k.
  double tail_bound(double r) const;
  Complex horner(Complex z) const;
};

// Exact Taylor expansion of a (scaled) Blaschke product about z0 together with
// a coefficientwise majorant built from the factor expansions.
struct LocalExpansion {
  std::vector<Complex> coefficients;
  std::vector<double> majorant;
  // Majorant series summed to infinity at t; +inf when it diverges.
  double majorant_total = 0.0;
  double evaluated_at = 0.0;

  // Bound on sum_{k>K} |c_k| t^k at t = evaluated_at.
  double tail_bound(int K) const;
};

void validate(const AnalyticFunction& f);

CoefficientSeries taylor_coefficients(const AnalyticFunction& f, int order);

// f(z) for |z| < 1.
Complex eval(const AnalyticFunction& f, Complex z);

// |f^(k)(z0)| / k!. Closed form for Moebius and Blaschke members, contour
// quadrature otherwise.
double kth_derivative_magnitude(const AnalyticFunction& f, Complex z0, int k);

// Cauchy-integral estimate of |f^(k)(z0)| / k! on the circle of radius
// 0.5 (1 - |z0|) about z0, doubling the node count until two successive
// raw DFT coefficients differ by less than 1e-11.
double contour_derivative_magnitude(const AnalyticFunction& f, Complex z0,
                                    int k);

BlaschkeProduct to_blaschke(const MoebiusExtremal& f);

// Taylor coefficients of f about z0 up to `order`; majorant summed at t.
LocalExpansion local_expansion(const BlaschkeProduct& f, Complex z0, int order,
                               double t);

// dist(outer(0), boundary of outer(D)): 1/4 for Koebe, 1/2 for the half-plane.
double boundary_distance(OuterMap outer);

struct BlaschkeSampling {
  int max_degree = 5;
  double zero_radius = 0.8;
  bool zero_at_origin = false;
};

// Degree uniform on 1..max_degree, zeros uniform on |z| < zero_radius,
// rotation uniform on the unit circle.
BlaschkeProduct random_blaschke(std::mt19937_64& rng,
                                const BlaschkeSampling& sampling = {});

// Uniform double in [0,1) from the top 53 bits; stable across standard
// library implementations.
double uniform01(std::mt19937_64& rng);

}  // namespace bohr
