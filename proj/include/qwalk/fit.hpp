#pragma once

#include <span>

namespace qwalk {

/// Least-squares slope of log(y) against log(x). Inputs must be positive.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Least-squares c in y = c x^2 (no intercept).
double fit_quadratic_coefficient(std::span<const double> x, std::span<const double> y);

}  // namespace qwalk
