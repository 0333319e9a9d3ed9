#include "qwalk/spectral.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr complex_t kI(0.0, 1.0);

double parity_sign(std::int64_t t) { return t % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

KEigensystem eigensystem(double k) {
  const double c = std::cos(k);
  const double root = std::sqrt(1.0 + c * c);
  KEigensystem es;
  es.k = k;
  es.omega = std::asin(std::sin(k) / kSqrt2);
  es.alpha = 1.0 / (kSqrt2 * std::sqrt(1.0 + c * c - c * root));
  es.beta = 1.0 / (kSqrt2 * std::sqrt(1.0 + c * c + c * root));
  es.u = std::polar(1.0, -k);
  es.v = kSqrt2 * std::polar(1.0, -es.omega) - es.u;
  es.w = -kSqrt2 * std::polar(1.0, es.omega) - es.u;
  return es;
}

FGFactors fg_factors(const KEigensystem& es, const CoinSpinor& s0) {
  return {std::conj(es.u) * s0.a + std::conj(es.v) * s0.b, std::conj(es.u) * s0.a + std::conj(es.w) * s0.b};
}

CoinSpinor apply_step_matrix(double k, const CoinSpinor& s) {
  const complex_t down = std::polar(1.0 / kSqrt2, -k);
  const complex_t up = std::polar(1.0 / kSqrt2, k);
  return {down * (s.a + s.b), up * (s.a - s.b)};
}

CoinSpinor spectral_evolve(const KEigensystem& es, const CoinSpinor& s0, std::int64_t t) {
  const FGFactors fg = fg_factors(es, s0);
  const double phase = es.omega * static_cast<double>(t);
  const complex_t first = es.alpha * es.alpha * fg.f * std::polar(1.0, -phase);
  const complex_t second = parity_sign(t) * es.beta * es.beta * fg.g * std::polar(1.0, phase);
  return {first * es.u + second * es.u, first * es.v + second * es.w};
}

KSpinorField k_evolve(const KSpinorField& f, StepCount t) {
  if (t.value() == 0) return f;
  std::vector<CoinSpinor> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    out[j] = spectral_evolve(eigensystem(f.node(j)), f[j], t.value());
  }
  return KSpinorField(std::move(out));
}

KSpinorField single_k_step(const KSpinorField& f) {
  std::vector<CoinSpinor> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) out[j] = apply_step_matrix(f.node(j), f[j]);
  return KSpinorField(std::move(out));
}

CoinSpinor reflected_closed_form(double k, std::int64_t t) {
  const double c = std::cos(k);
  const double root = std::sqrt(1.0 + c * c);
  const double omega = std::asin(std::sin(k) / kSqrt2);
  const double phase = omega * static_cast<double>(t);
  const double sign = parity_sign(t);
  const complex_t a = kI * std::polar(1.0, k) / (2.0 * root) *
                      (std::polar(1.0, -phase) - sign * std::polar(1.0, phase));
  const complex_t b = 0.5 * (1.0 + c / root) * std::polar(1.0, -phase) +
                      0.5 * sign * (1.0 - c / root) * std::polar(1.0, phase);
  return {a, b};
}

CoinSpinor closed_form_amplitudes(double k, std::int64_t t) {
  const CoinSpinor reflected = reflected_closed_form(-k, t);
  const double sign = parity_sign(t);
  return {kI * sign * reflected.a, sign * reflected.b};
}

}  // namespace qwalk
