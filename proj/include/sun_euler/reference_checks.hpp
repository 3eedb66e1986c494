#pragma once

#include <string>
#include <vector>

namespace sun {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Replays every published fixture (factor orderings, kernels, volumes,
/// Omega_N, parameter boxes, density coefficients) against the library.
std::vector<CheckOutcome> run_reference_checks();

}  // namespace sun
