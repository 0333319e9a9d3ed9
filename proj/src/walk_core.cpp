#include "qwalk/walk_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_finite(complex_t z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_range(double value, double lo, double hi, const char* name) {
  if (!std::isfinite(value) || value < lo || value > hi) {
    std::ostringstream msg;
    msg << name << " = " << value << " outside [" << lo << ", " << hi << "]";
    throw ParameterError(msg.str());
  }
}

// e^{-2 pi i m / N} for m = 0..N-1.
std::vector<complex_t> twiddles(std::size_t n) {
  std::vector<complex_t> out(n);
  for (std::size_t m = 0; m < n; ++m) {
    out[m] = std::polar(1.0, -2.0 * kPi * static_cast<double>(m) / static_cast<double>(n));
  }
  return out;
}

std::size_t wrap_index(std::int64_t m, std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((m % nn) + nn) % nn);
}

}  // namespace

bool CoinSpinor::is_finite() const { return qwalk::is_finite(a) && qwalk::is_finite(b); }

PositionState PositionState::from_amplitudes(std::int64_t x_min, std::vector<CoinSpinor> amplitudes) {
  if (amplitudes.empty()) throw ParameterError("position state needs at least one site");
  for (const auto& s : amplitudes) {
    if (!s.is_finite()) throw ParameterError("position state has non-finite amplitudes");
  }
  PositionState state(x_min, std::move(amplitudes));
  const double norm = state.norm_squared();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "position state not normalized: sum |a|^2 + |b|^2 = " << norm;
    throw ParameterError(msg.str());
  }
  return state;
}

PositionState PositionState::localized(std::int64_t x, CoinSpinor coin) {
  return from_amplitudes(x, {coin});
}

PositionState PositionState::trusted(std::int64_t x_min, std::vector<CoinSpinor> amplitudes) {
  return PositionState(x_min, std::move(amplitudes));
}

CoinSpinor PositionState::at(std::int64_t x) const {
  if (x < x_min() || x > x_max()) return {};
  return amplitudes_[static_cast<std::size_t>(x - x_min_)];
}

double PositionState::norm_squared() const {
  double sum = 0.0;
  for (const auto& s : amplitudes_) sum += s.norm_squared();
  return sum;
}

double max_abs_difference(const PositionState& lhs, const PositionState& rhs) {
  const std::int64_t lo = std::min(lhs.x_min(), rhs.x_min());
  const std::int64_t hi = std::max(lhs.x_max(), rhs.x_max());
  double worst = 0.0;
  for (std::int64_t x = lo; x <= hi; ++x) {
    const CoinSpinor l = lhs.at(x);
    const CoinSpinor r = rhs.at(x);
    worst = std::max({worst, std::abs(l.a - r.a), std::abs(l.b - r.b)});
  }
  return worst;
}

KSpinorField::KSpinorField(std::vector<CoinSpinor> values) : values_(std::move(values)) {
  if (values_.empty() || values_.size() % 2 != 0) {
    throw ParameterError("k-grid size must be even and positive, got " + std::to_string(values_.size()));
  }
}

double KSpinorField::node(std::size_t j) const {
  return -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(values_.size());
}

double KSpinorField::norm_squared() const {
  double sum = 0.0;
  for (const auto& s : values_) sum += s.norm_squared();
  return sum / static_cast<double>(values_.size());
}

double max_abs_difference(const KSpinorField& lhs, const KSpinorField& rhs) {
  if (lhs.size() != rhs.size()) throw ParameterError("k-fields live on different grids");
  double worst = 0.0;
  for (std::size_t j = 0; j < lhs.size(); ++j) {
    worst = std::max({worst, std::abs(lhs[j].a - rhs[j].a), std::abs(lhs[j].b - rhs[j].b)});
  }
  return worst;
}

CoinSpinor symmetric_coin() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {complex_t(h, 0.0), complex_t(0.0, h)};
}

namespace {

PositionState build(const Localized& ic) {
  require_range(ic.alpha, -kPi, kPi, "alpha");
  require_range(ic.beta, -kPi, kPi, "beta");
  const CoinSpinor coin{complex_t(std::cos(ic.alpha), 0.0), std::polar(std::sin(ic.alpha), ic.beta)};
  return PositionState::localized(0, coin);
}

PositionState build(const H1& ic) {
  require_range(ic.theta, -kPi / 2.0, kPi / 2.0, "theta");
  require_range(ic.phi, -kPi, kPi, "phi");
  const CoinSpinor chi = symmetric_coin();
  const complex_t left(std::cos(ic.theta), 0.0);
  const complex_t right = std::polar(std::sin(ic.theta), -ic.phi);
  return PositionState::from_amplitudes(
      -1, {{left * chi.a, left * chi.b}, {}, {right * chi.a, right * chi.b}});
}

PositionState build(const Gaussian& ic) {
  if (!std::isfinite(ic.sigma) || ic.sigma <= 0.0) {
    throw ParameterError("sigma must be positive, got " + std::to_string(ic.sigma));
  }
  const auto half_width = static_cast<std::int64_t>(std::ceil(8.0 * ic.sigma));
  std::vector<double> profile;
  profile.reserve(static_cast<std::size_t>(2 * half_width + 1));
  double norm = 0.0;
  for (std::int64_t x = -half_width; x <= half_width; ++x) {
    const double xd = static_cast<double>(x);
    profile.push_back(std::exp(-xd * xd / (4.0 * ic.sigma * ic.sigma)));
    norm += profile.back() * profile.back();
  }
  norm = std::sqrt(norm);
  const CoinSpinor chi = symmetric_coin();
  std::vector<CoinSpinor> amps;
  amps.reserve(profile.size());
  for (double c : profile) amps.push_back({chi.a * (c / norm), chi.b * (c / norm)});
  return PositionState::from_amplitudes(-half_width, std::move(amps));
}

PositionState build(const Custom& ic) { return ic.state; }

}  // namespace

PositionState build_initial(const InitialCondition& ic) {
  return std::visit([](const auto& v) { return build(v); }, ic);
}

KSpinorField fourier_transform(const PositionState& s, std::size_t grid_n) {
  if (grid_n == 0 || grid_n % 2 != 0) {
    throw ParameterError("grid size must be even and positive, got " + std::to_string(grid_n));
  }
  if (grid_n < 2 * s.width()) {
    throw AliasingError("grid of " + std::to_string(grid_n) + " nodes too small for support width " +
                        std::to_string(s.width()));
  }
  // e^{-i k_j x} = (-1)^x e^{-2 pi i j x / N}
  const auto tw = twiddles(grid_n);
  std::vector<CoinSpinor> values(grid_n);
  const auto amps = s.amplitudes();
  for (std::size_t j = 0; j < grid_n; ++j) {
    complex_t a{};
    complex_t b{};
    for (std::size_t i = 0; i < amps.size(); ++i) {
      const std::int64_t x = s.x_min() + static_cast<std::int64_t>(i);
      complex_t phase = tw[wrap_index(static_cast<std::int64_t>(j) * x, grid_n)];
      if (x % 2 != 0) phase = -phase;
      a += phase * amps[i].a;
      b += phase * amps[i].b;
    }
    values[j] = {a, b};
  }
  return KSpinorField(std::move(values));
}

PositionState inverse_fourier(const KSpinorField& f, std::int64_t x_min, std::int64_t x_max) {
  if (x_max < x_min) throw ParameterError("empty support for inverse transform");
  const std::size_t n = f.size();
  const auto width = static_cast<std::size_t>(x_max - x_min + 1);
  if (width > n) {
    throw AliasingError("support width " + std::to_string(width) + " exceeds grid capacity " +
                        std::to_string(n));
  }
  const auto tw = twiddles(n);
  std::vector<CoinSpinor> amps(width);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < width; ++i) {
    const std::int64_t x = x_min + static_cast<std::int64_t>(i);
    complex_t a{};
    complex_t b{};
    for (std::size_t j = 0; j < n; ++j) {
      // e^{+i k_j x} is the conjugate of the forward kernel.
      complex_t phase = std::conj(tw[wrap_index(static_cast<std::int64_t>(j) * x, n)]);
      if (x % 2 != 0) phase = -phase;
      a += phase * f[j].a;
      b += phase * f[j].b;
    }
    amps[i] = {a * scale, b * scale};
  }
  return PositionState::from_amplitudes(x_min, std::move(amps));
}

Distribution position_distribution(const PositionState& s) {
  Distribution dist;
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    dist.emplace(s.x_min() + static_cast<std::int64_t>(i), amps[i].norm_squared());
  }
  return dist;
}

double mean(const Distribution& dist) {
  double m = 0.0;
  for (const auto& [x, p] : dist) m += static_cast<double>(x) * p;
  return m;
}

double variance(const Distribution& dist) {
  double m1 = 0.0;
  double m2 = 0.0;
  for (const auto& [x, p] : dist) {
    const double xd = static_cast<double>(x);
    m1 += xd * p;
    m2 += xd * xd * p;
  }
  return m2 - m1 * m1;
}

}  // namespace qwalk
