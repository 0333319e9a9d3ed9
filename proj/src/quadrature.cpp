#include "qwalk/quadrature.hpp"

#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.size() <= 8) {
    T sum{};
    for (const T& x : v) sum += x;
    return sum;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

PeriodicGrid::PeriodicGrid(std::size_t n) : n_(n) {
  if (n == 0 || n % 2 != 0) throw ParameterError("grid size must be even and positive, got " + std::to_string(n));
}

std::complex<double> integrate_average(std::span<const std::complex<double>> samples) {
  if (samples.empty()) throw ParameterError("no samples to integrate");
  return pairwise_sum(samples) / static_cast<double>(samples.size());
}

double integrate_average(std::span<const double> samples) {
  if (samples.empty()) throw ParameterError("no samples to integrate");
  return pairwise_sum(samples) / static_cast<double>(samples.size());
}

}  // namespace qwalk
