#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gz/types.hpp"

namespace gz {

struct CriterionResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;  // worst observed residual, 0 when not applicable
  std::string detail;
};

// The acceptance suite. Sizes that range over n honor n_max (clamped to
// [2, 6]); fixed-size checks always run. Deterministic for a fixed seed.
std::vector<CriterionResult> run_selftest(std::uint64_t seed, int n_max,
                                          const ToleranceConfig& tol);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace gz
