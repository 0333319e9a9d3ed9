#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace qwalk {

using complex_t = std::complex<double>;

/// Amplitudes over the coin basis {|R>, |L>}.
struct CoinSpinor {
  complex_t a{};  // |R>
  complex_t b{};  // |L>

  double norm_squared() const { return std::norm(a) + std::norm(b); }
  bool is_finite() const;

  friend bool operator==(const CoinSpinor&, const CoinSpinor&) = default;
};

/// Tolerance on sum_x |a_x|^2 + |b_x|^2 = 1.
inline constexpr double kNormTolerance = 1e-12;

/// Walker state on a finite window [x_min, x_max] of the line, stored densely.
/// Sites outside the window are zero.
class PositionState {
 public:
  /// Validates finiteness and normalization.
  static PositionState from_amplitudes(std::int64_t x_min, std::vector<CoinSpinor> amplitudes);
  static PositionState localized(std::int64_t x, CoinSpinor coin);

  /// No validation. For operations that preserve the invariants by construction.
  static PositionState trusted(std::int64_t x_min, std::vector<CoinSpinor> amplitudes);

  std::int64_t x_min() const { return x_min_; }
  std::int64_t x_max() const { return x_min_ + static_cast<std::int64_t>(amplitudes_.size()) - 1; }
  std::size_t width() const { return amplitudes_.size(); }

  /// Zero outside the stored window.
  CoinSpinor at(std::int64_t x) const;
  std::span<const CoinSpinor> amplitudes() const { return amplitudes_; }
  double norm_squared() const;

 private:
  PositionState(std::int64_t x_min, std::vector<CoinSpinor> amplitudes)
      : x_min_(x_min), amplitudes_(std::move(amplitudes)) {}

  std::int64_t x_min_ = 0;
  std::vector<CoinSpinor> amplitudes_;
};

/// Largest |difference| of any amplitude over the union of both windows.
double max_abs_difference(const PositionState& lhs, const PositionState& rhs);

/// Spinor field sampled on k_j = -pi + 2 pi j / N, j = 0..N-1.
class KSpinorField {
 public:
  /// N must be even and positive and match values.size().
  explicit KSpinorField(std::vector<CoinSpinor> values);

  std::size_t size() const { return values_.size(); }
  double node(std::size_t j) const;
  const CoinSpinor& operator[](std::size_t j) const { return values_[j]; }
  std::span<const CoinSpinor> values() const { return values_; }

  /// (1/N) sum_j |a_j|^2 + |b_j|^2; equals the position-space norm by Parseval.
  double norm_squared() const;

 private:
  std::vector<CoinSpinor> values_;
};

double max_abs_difference(const KSpinorField& lhs, const KSpinorField& rhs);

// Initial-condition families. Angles are in radians.

/// |0> (x) (cos(alpha)|R> + e^{i beta} sin(alpha)|L>), alpha, beta in [-pi, pi].
struct Localized {
  double alpha = 0.0;
  double beta = 0.0;
};

/// (cos(theta)|-1> + e^{-i phi} sin(theta)|+1>) (x) chi,
/// theta in [-pi/2, pi/2], phi in [-pi, pi].
struct H1 {
  double theta = 0.0;
  double phi = 0.0;
};

/// sum_x c_x |x> (x) chi with real c_x ~ exp(-x^2 / (4 sigma^2)), |x| <= ceil(8 sigma).
struct Gaussian {
  double sigma = 1.0;
};

struct Custom {
  PositionState state;
};

using InitialCondition = std::variant<Localized, H1, Gaussian, Custom>;

/// The symmetric coin chi = (|R> + i|L>)/sqrt2.
CoinSpinor symmetric_coin();

PositionState build_initial(const InitialCondition& ic);

/// a~_k = sum_x e^{-i k x} a_x on an N-node grid. Requires N even and
/// N >= 2 * width(s).
KSpinorField fourier_transform(const PositionState& s, std::size_t grid_n);

/// a_x = (1/N) sum_j e^{i k_j x} a~_j for x in [x_min, x_max].
/// Requires x_max - x_min + 1 <= N.
PositionState inverse_fourier(const KSpinorField& f, std::int64_t x_min, std::int64_t x_max);

using Distribution = std::map<std::int64_t, double>;

Distribution position_distribution(const PositionState& s);

double mean(const Distribution& dist);
double variance(const Distribution& dist);

}  // namespace qwalk
