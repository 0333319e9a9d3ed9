#include "qwalk/fit.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ParameterError("need at least two (x, y) pairs");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0.0 || y[i] <= 0.0) throw ParameterError("log-log fit needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw ParameterError("log-log fit needs distinct x values");
  return (n * sxy - sx * sy) / denom;
}

double fit_quadratic_coefficient(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) throw ParameterError("need matching, non-empty samples");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double x2 = x[i] * x[i];
    num += x2 * y[i];
    den += x2 * x2;
  }
  if (den == 0.0) throw ParameterError("quadratic fit needs a nonzero x");
  return num / den;
}

}  // namespace qwalk
