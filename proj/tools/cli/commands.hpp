#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/output.hpp"

namespace qwalk::cli {

/// Rows (t, s_e, variance, a, c, b_abs) for t = 0..t_max; summary carries the
/// long-time entropy predicted by the quadrature route.
Table cmd_simulate(const RunConfig& cfg);

/// Long-time reduced density and entropy for the configured initial condition
/// by every route that applies to it.
Table cmd_asymptotic(const RunConfig& cfg);

/// (alpha, beta, s_e) on a steps1 x steps2 periodic grid over [-pi, pi)^2.
Table cmd_sweep_localized(const RunConfig& cfg);

/// (theta, phi, s_e) on theta in [-pi/2, pi/2), phi in [-pi, pi); summary
/// reports the extrema and counts strict local maxima and minima on the torus.
Table cmd_sweep_h1(const RunConfig& cfg);

/// (sigma, s_e, smaller_eigenvalue) per sigma; summary carries the log-log
/// slope of the smaller eigenvalue against sigma.
Table cmd_gaussian_scan(const RunConfig& cfg);

struct Check {
  std::string name;
  double computed = 0.0;
  double target = 0.0;
  double tolerance = 0.0;

  double error() const;
  bool passed() const { return error() <= tolerance; }
};

/// Analytic-constant catalogue: quadratures and radicals against their closed forms.
std::vector<Check> verification_catalog(std::size_t grid_n);
Table cmd_verify(const RunConfig& cfg, bool& all_passed);

/// Strict local extrema of a periodic rows x cols grid (8-neighbourhood).
struct ExtremaCount {
  std::size_t maxima = 0;
  std::size_t minima = 0;
};
ExtremaCount count_local_extrema(const std::vector<double>& values, std::size_t rows, std::size_t cols);

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Full command-line entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli
