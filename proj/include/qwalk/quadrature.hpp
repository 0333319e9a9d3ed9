#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace qwalk {

/// Uniform grid on [-pi, pi): k_j = -pi + 2 pi j / N, weight 1/N per node, so
/// that sums approximate the average (1/2pi) integral over one period.
class PeriodicGrid {
 public:
  explicit PeriodicGrid(std::size_t n);

  std::size_t size() const { return n_; }
  double node(std::size_t j) const {
    return -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_);
  }
  double weight() const { return 1.0 / static_cast<double>(n_); }

  /// Samples f at every node.
  template <typename F>
  auto sample(F&& f) const {
    std::vector<decltype(f(0.0))> out;
    out.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) out.push_back(f(node(j)));
    return out;
  }

 private:
  std::size_t n_;
};

/// Default grid size for k-space work.
inline constexpr std::size_t kDefaultGridSize = 1024;

// Periodic trapezoidal rule (1/N) sum_j f(k_j). The reduction is a fixed
// pairwise tree so results are reproducible bit for bit.
std::complex<double> integrate_average(std::span<const std::complex<double>> samples);
double integrate_average(std::span<const double> samples);

template <typename F>
auto integrate_average(const PeriodicGrid& grid, F&& f) {
  const auto samples = grid.sample(std::forward<F>(f));
  return integrate_average(std::span(samples));
}

}  // namespace qwalk
