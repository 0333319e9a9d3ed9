#include "qwalk/evolution.hpp"

#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

StepCount::StepCount(std::int64_t t) : t_(t) {
  if (t < 0) throw ParameterError("step count must be non-negative, got " + std::to_string(t));
}

CoinSpinor hadamard_coin(const CoinSpinor& s) {
  // 1/sqrt2 split into hi + lo; a single rounded constant drifts the norm by ~2e-16 per step.
  constexpr double hi = 1.0 / std::numbers::sqrt2;
  constexpr double lo = 6.268583589525109e-17;
  const complex_t sum = s.a + s.b;
  const complex_t diff = s.a - s.b;
  return {sum * hi + sum * lo, diff * hi + diff * lo};
}

PositionState step(const PositionState& s) {
  const auto in = s.amplitudes();
  std::vector<CoinSpinor> out(in.size() + 2);
  // Site i of the input is x_min + i; site i of the output is x_min - 1 + i.
  for (std::size_t i = 0; i < in.size(); ++i) {
    const CoinSpinor c = hadamard_coin(in[i]);
    out[i + 2].a = c.a;
    out[i].b = c.b;
  }
  return PositionState::trusted(s.x_min() - 1, std::move(out));
}

PositionState evolve(const PositionState& s, StepCount t) {
  PositionState current = s;
  for (std::int64_t i = 0; i < t.value(); ++i) current = step(current);
  return current;
}

}  // namespace qwalk
