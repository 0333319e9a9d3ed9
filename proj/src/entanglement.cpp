#include "qwalk/entanglement.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"
#include "qwalk/quadrature.hpp"

namespace qwalk {

ReducedDensity reduced_density_position(const PositionState& s) {
  ReducedDensity rd;
  for (const auto& amp : s.amplitudes()) {
    rd.a += std::norm(amp.a);
    rd.c += std::norm(amp.b);
    rd.b += amp.a * std::conj(amp.b);
  }
  return rd;
}

ReducedDensity reduced_density_k(const KSpinorField& f) {
  std::vector<double> aa(f.size());
  std::vector<double> bb(f.size());
  std::vector<complex_t> ab(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    aa[j] = std::norm(f[j].a);
    bb[j] = std::norm(f[j].b);
    ab[j] = f[j].a * std::conj(f[j].b);
  }
  return {integrate_average(std::span<const double>(aa)), integrate_average(std::span<const double>(bb)),
          integrate_average(std::span<const complex_t>(ab))};
}

double binary_entropy(double r1, double r2) {
  double s = 0.0;
  if (r1 > 0.0) s -= r1 * std::log2(r1);
  if (r2 > 0.0) s -= r2 * std::log2(r2);
  return s;
}

EntanglementResult entropy_from_delta(double delta) {
  if (!std::isfinite(delta) || delta < -kDeltaTolerance || delta > 0.25 + kDeltaTolerance) {
    std::ostringstream msg;
    msg << "reduced density determinant " << delta << " outside [0, 1/4]";
    throw InvalidDensityError(msg.str());
  }
  if (delta <= kDeltaTolerance) return {1.0, 0.0, 0.0};
  if (delta >= 0.25 - kDeltaTolerance) return {0.5, 0.5, 1.0};
  const double r1 = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * delta));
  // r1 r2 = delta; avoids cancellation in (1 - sqrt(1 - 4 delta))/2.
  const double r2 = delta / r1;
  return {r1, r2, binary_entropy(r1, r2)};
}

EntanglementResult entropy(const ReducedDensity& rd) {
  if (std::abs(rd.trace() - 1.0) > kDeltaTolerance) {
    std::ostringstream msg;
    msg << "reduced density trace " << rd.trace() << " differs from 1";
    throw InvalidDensityError(msg.str());
  }
  return entropy_from_delta(rd.delta());
}

std::vector<HistoryPoint> entanglement_history(const InitialCondition& ic, StepCount t_max) {
  std::vector<HistoryPoint> history;
  history.reserve(static_cast<std::size_t>(t_max.value()) + 1);
  PositionState state = build_initial(ic);
  for (std::int64_t t = 0;; ++t) {
    history.push_back({t, entropy(reduced_density_position(state)).entropy});
    if (t == t_max.value()) break;
    state = step(state);
  }
  return history;
}

}  // namespace qwalk
