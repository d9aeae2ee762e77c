#pragma once

#include <string>
#include <vector>

#include "rsc/numerics/bigfloat.hpp"

namespace rsc {

/// One published identity, re-derived by the library and checked against its
/// printed form. `residual` is the largest discrepancy over the checks (0 or 1
/// for exact comparisons); it passes below the context tolerance.
struct FixtureResult {
  std::string name;
  std::string statement;
  BigReal residual;
  bool pass = false;
  std::string detail;
};

std::vector<FixtureResult> reference_fixtures(const PrecisionContext& ctx);

}  // namespace rsc
