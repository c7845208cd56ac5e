#include "bohr/functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bohr/errors.hpp"
#include "bohr/weights.hpp"

namespace bohr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_in_disk(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream msg;
    msg << what << ": |z| = " << std::abs(z) << " is not < 1";
    throw DomainError(msg.str());
  }
}

std::vector<Complex> convolve(const std::vector<Complex>& a,
                              const std::vector<Complex>& b, std::size_t n) {
  std::vector<Complex> out(n, Complex{});
  for (std::size_t i = 0; i < n && i < a.size(); ++i) {
    if (a[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Complex outer_value(OuterMap outer, Complex w) {
  const Complex d = 1.0 - w;
  return outer == OuterMap::Koebe ? w / (d * d) : w / d;
}

}  // namespace

double CoefficientSeries::tail_bound(double r) const {
  if (growth_scale == 0.0) return 0.0;
  return growth_scale *
         closed_form::power_moment_tail(growth_degree, truncation_order() + 1, r);
}

Complex CoefficientSeries::horner(Complex z) const {
  Complex acc{};
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

double LocalExpansion::tail_bound(int K) const {
  if (!std::isfinite(majorant_total)) return std::numeric_limits<double>::infinity();
  double partial = 0.0;
  double tk = 1.0;
  const int last = std::min<int>(K, static_cast<int>(majorant.size()) - 1);
  for (int k = 0; k <= last; ++k) {
    partial += majorant[k] * tk;
    tk *= evaluated_at;
  }
  // Rounding slack on the closed-form total.
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * majorant_total;
  return std::max(0.0, majorant_total - partial) + slack;
}

void validate(const AnalyticFunction& f) {
  std::visit(
      overloaded{
          [](const ConstantFunction& c) {
            if (!(std::abs(c.value) <= 1.0))
              throw DomainError("constant function must satisfy |c| <= 1");
          },
          [](const MoebiusExtremal& m) {
            if (!(m.a >= 0.0 && m.a <= 1.0))
              throw DomainError("Moebius parameter a must lie in [0,1]");
          },
          [](const BlaschkeProduct& b) {
            if (!(std::abs(b.rotation) <= 1.0 + 1e-15))
              throw DomainError("Blaschke rotation must satisfy |rotation| <= 1");
            for (Complex z : b.zeros)
              if (!(std::abs(z) < 1.0))
                throw DomainError("Blaschke zeros must lie in the open disk");
          },
          [](const KoebeFunction&) {},
          [](const HalfPlaneMap&) {},
          [](const SubordinationPair& p) {
            validate(AnalyticFunction{p.inner});
            if (std::abs(eval(AnalyticFunction{p.inner}, Complex{})) > 1e-15)
              throw DomainError("subordination inner function must fix 0");
          },
      },
      f);
}

BlaschkeProduct to_blaschke(const MoebiusExtremal& f) {
  // g = (z + a)/(1 + a z) has its zero at -a; h = -(z - a)/(1 - a z).
  if (f.sign == MoebiusSign::Plus) return {{Complex{-f.a, 0.0}}, Complex{1.0, 0.0}};
  return {{Complex{f.a, 0.0}}, Complex{-1.0, 0.0}};
}

LocalExpansion local_expansion(const BlaschkeProduct& f, Complex z0, int order,
                               double t) {
  require_in_disk(z0, "local_expansion");
  if (order < 0) throw DomainError("expansion order must be >= 0");
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  LocalExpansion out;
  out.coefficients.assign(n, Complex{});
  out.majorant.assign(n, 0.0);
  out.coefficients[0] = f.rotation;
  out.majorant[0] = std::abs(f.rotation);
  out.majorant_total = std::abs(f.rotation);
  out.evaluated_at = t;

  std::vector<Complex> next(n);
  std::vector<double> next_major(n);
  for (Complex a : f.zeros) {
    // (z - a)/(1 - conj(a) z) about z0: alpha + beta * t / (1 - q t).
    const Complex d = 1.0 - std::conj(a) * z0;
    const Complex alpha = (z0 - a) / d;
    const Complex beta = (1.0 - std::norm(a)) / (d * d);
    const Complex q = std::conj(a) / d;

    Complex y{};
    double ym = 0.0;
    const double aa = std::abs(alpha), ab = std::abs(beta), aq = std::abs(q);
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) {
        y = out.coefficients[k - 1] + q * y;
        ym = out.majorant[k - 1] + aq * ym;
      }
      next[k] = alpha * out.coefficients[k] + beta * y;
      next_major[k] = aa * out.majorant[k] + ab * ym;
    }
    out.coefficients.swap(next);
    out.majorant.swap(next_major);

    if (aq * t < 1.0)
      out.majorant_total *= aa + ab * t / (1.0 - aq * t);
    else
      out.majorant_total = std::numeric_limits<double>::infinity();
  }
  return out;
}

CoefficientSeries taylor_coefficients(const AnalyticFunction& f, int order) {
  if (order < 0) throw DomainError("truncation order must be >= 0");
  validate(f);
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  CoefficientSeries out;
  out.coefficients.assign(n, Complex{});

  std::visit(
      overloaded{
          [&](const ConstantFunction& c) {
            out.coefficients[0] = c.value;
            out.growth_scale = 0.0;
          },
          [&](const MoebiusExtremal& m) {
            out.coefficients[0] = m.a;
            const double scale = 1.0 - m.a * m.a;
            double apow = 1.0;  // a^{k-1}
            for (std::size_t k = 1; k < n; ++k) {
              const double sign = (m.sign == MoebiusSign::Plus && k % 2 == 1) ? 1.0 : -1.0;
              out.coefficients[k] = sign * scale * apow;
              apow *= m.a;
            }
            out.growth_scale = scale;
          },
          [&](const BlaschkeProduct& b) {
            out.coefficients = local_expansion(b, Complex{}, order, 0.0).coefficients;
            out.growth_scale = std::abs(b.rotation);
          },
          [&](const KoebeFunction&) {
            for (std::size_t k = 1; k < n; ++k) out.coefficients[k] = static_cast<double>(k);
            out.growth_degree = 1;
          },
          [&](const HalfPlaneMap&) {
            for (std::size_t k = 1; k < n; ++k) out.coefficients[k] = 1.0;
          },
          [&](const SubordinationPair& p) {
            auto w = local_expansion(p.inner, Complex{}, order, 0.0).coefficients;
            w[0] = Complex{};
            // s = 1 / (1 - w)
            std::vector<Complex> s(n, Complex{});
            s[0] = 1.0;
            for (std::size_t k = 1; k < n; ++k) {
              Complex acc{};
              for (std::size_t j = 1; j <= k; ++j) acc += w[j] * s[k - j];
              s[k] = acc;
            }
            auto g = convolve(w, s, n);
            if (p.outer == OuterMap::Koebe) {
              g = convolve(g, s, n);
              out.growth_degree = 1;
            }
            out.coefficients = std::move(g);
          },
      },
      f);
  return out;
}

Complex eval(const AnalyticFunction& f, Complex z) {
  require_in_disk(z, "eval");
  return std::visit(
      overloaded{
          [](const ConstantFunction& c) { return c.value; },
          [&](const MoebiusExtremal& m) {
            if (m.sign == MoebiusSign::Plus) return (m.a + z) / (1.0 + m.a * z);
            return (m.a - z) / (1.0 - m.a * z);
          },
          [&](const BlaschkeProduct& b) {
            Complex acc = b.rotation;
            for (Complex a : b.zeros) acc *= (z - a) / (1.0 - std::conj(a) * z);
            return acc;
          },
          [&](const KoebeFunction&) { return outer_value(OuterMap::Koebe, z); },
          [&](const HalfPlaneMap&) { return outer_value(OuterMap::HalfPlane, z); },
          [&](const SubordinationPair& p) {
            return outer_value(p.outer, eval(AnalyticFunction{p.inner}, z));
          },
      },
      f);
}

double contour_derivative_magnitude(const AnalyticFunction& f, Complex z0, int k) {
  require_in_disk(z0, "contour_derivative_magnitude");
  if (k < 1) throw DomainError("derivative order must be >= 1");
  const double rho = 0.5 * (1.0 - std::abs(z0));
  constexpr double two_pi = 2.0 * std::numbers::pi;

  auto raw = [&](int nodes) {
    Complex acc{};
    for (int j = 0; j < nodes; ++j) {
      const double theta = two_pi * j / nodes;
      acc += eval(f, z0 + std::polar(rho, theta)) * std::polar(1.0, -k * theta);
    }
    return acc / static_cast<double>(nodes);
  };

  // Fewer than ~2k nodes alias low-order coefficients onto c_k, and two
  // aliased grids can agree with each other.
  int first = 8;
  while (first < 4 * (k + 1)) first *= 2;
  Complex prev = raw(first);
  for (int nodes = 2 * first; nodes <= (1 << 16); nodes *= 2) {
    const Complex cur = raw(nodes);
    if (std::abs(cur - prev) < 1e-11) return std::abs(cur) / std::pow(rho, k);
    prev = cur;
  }
  throw ConvergenceError("contour quadrature did not stabilise with 2^16 nodes");
}

double kth_derivative_magnitude(const AnalyticFunction& f, Complex z0, int k) {
  require_in_disk(z0, "kth_derivative_magnitude");
  if (k < 1) throw DomainError("derivative order must be >= 1");
  validate(f);
  return std::visit(
      overloaded{
          [](const ConstantFunction&) { return 0.0; },
          [&](const MoebiusExtremal& m) {
            const double d = std::abs(m.sign == MoebiusSign::Plus ? 1.0 + m.a * z0
                                                                  : 1.0 - m.a * z0);
            return (1.0 - m.a * m.a) * std::pow(m.a, k - 1) / std::pow(d, k + 1);
          },
          [&](const BlaschkeProduct& b) {
            return std::abs(local_expansion(b, z0, k, 0.0).coefficients[k]);
          },
          [&](const auto&) { return contour_derivative_magnitude(f, z0, k); },
      },
      f);
}

double boundary_distance(OuterMap outer) {
  return outer == OuterMap::Koebe ? 0.25 : 0.5;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BlaschkeProduct random_blaschke(std::mt19937_64& rng, const BlaschkeSampling& sampling) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const int degree = 1 + static_cast<int>(uniform01(rng) * sampling.max_degree);
  BlaschkeProduct b;
  b.zeros.reserve(degree);
  for (int i = 0; i < degree; ++i) {
    if (i == 0 && sampling.zero_at_origin) {
      b.zeros.emplace_back(0.0, 0.0);
      continue;
    }
    const double radius = sampling.zero_radius * std::sqrt(uniform01(rng));
    b.zeros.push_back(std::polar(radius, two_pi * uniform01(rng)));
  }
  b.rotation = std::polar(1.0, two_pi * uniform01(rng));
  return b;
}

}  // namespace bohr
