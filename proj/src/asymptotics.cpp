#include "qwalk/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kCoefficientTolerance = 1e-10;
constexpr double kSymmetryTolerance = 1e-10;

void require_range(double value, double lo, double hi, const char* name) {
  if (!std::isfinite(value) || value < lo || value > hi) {
    std::ostringstream msg;
    msg << name << " = " << value << " outside [" << lo << ", " << hi << "]";
    throw ParameterError(msg.str());
  }
}

double pow4(double x) { return (x * x) * (x * x); }

}  // namespace

namespace constants {

double s0() { return binary_entropy(1.0 / kSqrt2, 1.0 - 1.0 / kSqrt2); }

double s_plus() { return 1.0 / kSqrt2 - 1.0 - std::log2(kSqrt2 - 1.0); }

double s_minus() { return -2.0 * (kSqrt2 - 1.0) * (1.0 + kSqrt2 * std::log2(kSqrt2 - 1.0)); }

}  // namespace constants

AsymptoticCoefficients closed_form_coefficients() {
  const double b1 = 0.5 - kSqrt2 / 4.0;
  return {1.0 - kSqrt2 / 4.0, kSqrt2 / 4.0, b1, b1, kSqrt2 / 4.0 - 0.5, b1, (kSqrt2 - 1.0) / 2.0};
}

AsymptoticCoefficients quadrature_coefficients(std::size_t grid_n) {
  const PeriodicGrid grid(grid_n);
  std::array<std::vector<double>, 7> integrands;
  for (auto& v : integrands) v.reserve(grid_n);
  for (std::size_t j = 0; j < grid_n; ++j) {
    const KEigensystem es = eigensystem(grid.node(j));
    const double a4 = pow4(es.alpha);
    const double b4 = pow4(es.beta);
    const double v2 = std::norm(es.v);
    const double w2 = std::norm(es.w);
    const double minus = 1.0 - kSqrt2 * std::cos(es.omega - es.k);
    const double plus = 1.0 + kSqrt2 * std::cos(es.omega + es.k);
    integrands[0].push_back(a4 + b4);
    integrands[1].push_back(a4 * v2 + b4 * w2);
    // Cross term of the diagonal element, written through the eigenvector parts.
    integrands[2].push_back(a4 * (std::conj(es.u) * es.v).real() + b4 * (std::conj(es.u) * es.w).real());
    integrands[3].push_back(-(a4 * minus + b4 * plus));
    integrands[4].push_back(-(a4 * v2 * minus + b4 * w2 * plus));
    integrands[5].push_back(a4 * minus * minus + b4 * plus * plus);
    const double sm = std::sin(es.omega - es.k);
    const double sp = std::sin(es.omega + es.k);
    integrands[6].push_back(2.0 * (a4 * sm * sm + b4 * sp * sp));
  }
  auto avg = [&](std::size_t i) { return integrate_average(std::span<const double>(integrands[i])); };
  const AsymptoticCoefficients got{avg(0), avg(1), avg(2), avg(3), avg(4), avg(5), avg(6)};

  const AsymptoticCoefficients want = closed_form_coefficients();
  const std::array<std::pair<const char*, std::pair<double, double>>, 7> checks{{
      {"c1", {got.c1, want.c1}},
      {"c2", {got.c2, want.c2}},
      {"c3", {got.c3, want.c3}},
      {"b1", {got.b1, want.b1}},
      {"b2", {got.b2, want.b2}},
      {"b3", {got.b3, want.b3}},
      {"b4", {got.b4, want.b4}},
  }};
  for (const auto& [name, values] : checks) {
    if (std::abs(values.first - values.second) > kCoefficientTolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "coefficient " << name << " quadrature " << values.first << " vs closed form " << values.second
          << " on " << grid_n << " nodes";
      throw ConsistencyError(msg.str());
    }
  }
  return got;
}

double q_weight(double k) {
  const double c = std::cos(k);
  return 1.0 + std::sin(k) * c / (1.0 + c * c);
}

complex_t r_weight(double k) {
  const double c = std::cos(k);
  return std::polar(1.0, -k) * (std::sin(k) / (1.0 + c * c));
}

ReducedDensity asymptotic_reduced_density(const KSpinorField& f0) {
  const std::size_t n = f0.size();
  std::vector<double> aa(n);
  std::vector<double> cc(n);
  std::vector<complex_t> bb(n);
  for (std::size_t j = 0; j < n; ++j) {
    const KEigensystem es = eigensystem(f0.node(j));
    const FGFactors fg = fg_factors(es, f0[j]);
    const double first = pow4(es.alpha) * std::norm(fg.f);
    const double second = pow4(es.beta) * std::norm(fg.g);
    aa[j] = first + second;
    cc[j] = first * std::norm(es.v) + second * std::norm(es.w);
    bb[j] = first * es.u * std::conj(es.v) + second * es.u * std::conj(es.w);
  }
  return {integrate_average(std::span<const double>(aa)), integrate_average(std::span<const double>(cc)),
          integrate_average(std::span<const complex_t>(bb))};
}

ReducedDensity asymptotic_reduced_density_symmetric(std::span<const double> weights) {
  if (weights.empty() || weights.size() % 2 != 0) {
    throw ParameterError("weights must sit on an even, non-empty grid");
  }
  const PeriodicGrid grid(weights.size());
  std::vector<double> qa(weights.size());
  std::vector<complex_t> rb(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double k = grid.node(j);
    qa[j] = q_weight(k) * weights[j];
    rb[j] = r_weight(k) * weights[j];
  }
  const double a = integrate_average(std::span<const double>(qa));
  const double trace = 2.0 * integrate_average(weights);
  return {a, trace - a, integrate_average(std::span<const complex_t>(rb))};
}

ReducedDensity asymptotic_reduced_density_symmetric(const KSpinorField& f0) {
  constexpr complex_t i(0.0, 1.0);
  std::vector<double> weights(f0.size());
  for (std::size_t j = 0; j < f0.size(); ++j) {
    if (std::abs(f0[j].b - i * f0[j].a) > kSymmetryTolerance) {
      throw PreconditionError("field violates b = i a at node " + std::to_string(j));
    }
    weights[j] = std::norm(f0[j].a);
  }
  return asymptotic_reduced_density_symmetric(std::span<const double>(weights));
}

double localized_delta(double alpha, double beta) {
  require_range(alpha, -kPi, kPi, "alpha");
  require_range(beta, -kPi, kPi, "beta");
  const double b1 = closed_form_coefficients().b1;
  return constants::kDelta0 - 2.0 * b1 * b1 * std::cos(beta) * std::sin(4.0 * alpha);
}

ReducedDensity localized_reduced_density(double alpha, double beta) {
  require_range(alpha, -kPi, kPi, "alpha");
  require_range(beta, -kPi, kPi, "beta");
  const AsymptoticCoefficients k = closed_form_coefficients();
  const double s2 = std::sin(alpha) * std::sin(alpha);
  const double sin2a = std::sin(2.0 * alpha);
  const double a = k.c1 + (k.c2 - k.c1) * s2 + k.c3 * sin2a * std::cos(beta);
  const complex_t b = k.b1 + (k.b2 - k.b1) * s2 + sin2a * complex_t(k.b3 * std::cos(beta), -k.b4 * std::sin(beta));
  return {a, 1.0 - a, b};
}

EntanglementResult localized_entropy(double alpha, double beta) {
  return entropy_from_delta(localized_delta(alpha, beta));
}

EntanglementResult h1_eigenvalues(double theta, double phi) {
  require_range(theta, -kPi / 2.0, kPi / 2.0, "theta");
  require_range(phi, -kPi, kPi, "phi");
  using namespace constants;
  const double s2 = std::sin(2.0 * theta);
  const double real_part = kB0 - kBPrime * s2 * std::cos(phi);
  const double imag_part = kBPlus * s2 * std::sin(phi);
  const double radius = std::sqrt(real_part * real_part + 2.0 * imag_part * imag_part);
  const double r1 = 0.5 + radius;
  const double r2 = 0.5 - radius;
  return {r1, r2, binary_entropy(r1, r2)};
}

ReducedDensity h1_reduced_density(double theta, double phi) {
  require_range(theta, -kPi / 2.0, kPi / 2.0, "theta");
  require_range(phi, -kPi, kPi, "phi");
  using namespace constants;
  const double s2 = std::sin(2.0 * theta);
  const double a = 0.5 - kBPlus * s2 * std::sin(phi);
  return {a, 1.0 - a, complex_t(-kBPlus * s2 * std::sin(phi), -(kB0 - kBPrime * s2 * std::cos(phi)))};
}

std::size_t gaussian_grid_size(double sigma) {
  if (!std::isfinite(sigma) || sigma <= 0.0) throw ParameterError("sigma must be positive");
  const auto width = static_cast<std::size_t>(2.0 * std::ceil(8.0 * sigma) + 1.0);
  return std::max(kDefaultGridSize, std::bit_ceil(2 * width));
}

EntanglementResult gaussian_asymptotics(double sigma, std::size_t grid_n) {
  const PositionState s0 = build_initial(Gaussian{sigma});
  const std::size_t n = grid_n == 0 ? gaussian_grid_size(sigma) : grid_n;
  return entropy(asymptotic_reduced_density_symmetric(fourier_transform(s0, n)));
}

double gaussian_asymptotic_entropy(double sigma) { return gaussian_asymptotics(sigma).entropy; }

}  // namespace qwalk
