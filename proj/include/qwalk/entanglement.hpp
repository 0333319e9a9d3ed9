#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/evolution.hpp"
#include "qwalk/walk_core.hpp"

namespace qwalk {

/// Reduced coin density [[A, B], [B*, C]].
struct ReducedDensity {
  double a = 0.0;
  double c = 0.0;
  complex_t b;

  double trace() const { return a + c; }
  double delta() const { return a * c - std::norm(b); }
};

/// Eigenvalues of the reduced density (r1 >= r2) and its von Neumann entropy in bits.
struct EntanglementResult {
  double r1 = 1.0;
  double r2 = 0.0;
  double entropy = 0.0;
};

inline constexpr double kDeltaTolerance = 1e-12;

/// A = sum |a_x|^2, B = sum a_x b_x^*, C = sum |b_x|^2.
ReducedDensity reduced_density_position(const PositionState& s);

/// Same quantities as periodic-rule averages over the k grid.
ReducedDensity reduced_density_k(const KSpinorField& f);

/// Eigenvalues r = (1 +- sqrt(1 - 4 delta))/2 and the entropy of entanglement.
/// Throws InvalidDensityError when delta leaves [0, 1/4] by more than
/// kDeltaTolerance; values inside the band are clamped.
EntanglementResult entropy_from_delta(double delta);

/// Checks the unit trace, then defers to entropy_from_delta.
EntanglementResult entropy(const ReducedDensity& rd);

/// -r1 log2 r1 - r2 log2 r2 with 0 log 0 = 0.
double binary_entropy(double r1, double r2);

struct HistoryPoint {
  std::int64_t t = 0;
  double entropy = 0.0;
};

/// Entropy of entanglement after every step 0..t_max.
std::vector<HistoryPoint> entanglement_history(const InitialCondition& ic, StepCount t_max);

}  // namespace qwalk
