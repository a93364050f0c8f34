#pragma once

#include "ladderlab/quadrature.hpp"

namespace ladderlab::testing {

// Covers Phi(y) for y up to about 1700 with the default tolerances.
inline constexpr double kFixtureTMax = 30000.0;

// Built once per process.
inline const CumulativeTable& fixture_table() {
  static const CumulativeTable table = build_checkpoints(kFixtureTMax);
  return table;
}

}  // namespace ladderlab::testing
