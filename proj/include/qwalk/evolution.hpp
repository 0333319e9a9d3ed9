#pragma once

#include <cstdint>

#include "qwalk/walk_core.hpp"

namespace qwalk {

/// Number of discrete walk steps; never negative.
class StepCount {
 public:
  explicit StepCount(std::int64_t t);
  std::int64_t value() const { return t_; }

 private:
  std::int64_t t_;
};

/// H: (a, b) -> ((a + b)/sqrt2, (a - b)/sqrt2).
CoinSpinor hadamard_coin(const CoinSpinor& s);

/// One application of U = S (I (x) H): coin first, then R moves to x+1 and L
/// to x-1. The window grows by one site on each side.
PositionState step(const PositionState& s);

PositionState evolve(const PositionState& s, StepCount t);

}  // namespace qwalk
