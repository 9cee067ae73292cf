#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmagic {

struct CheckResult {
  std::string name;
  bool pass{};
  double residual{};   // worst measured deviation for the check
  std::string detail;  // key measured quantities, human-readable
};

struct VerifyOptions {
  bool fast = false;          // reduced sample counts, same thresholds
  std::uint64_t seed = 20250802;
};

// Runs the full verification battery (frontier anchors, quartic roots,
// analytic/direct equivalence, catalogs, Clifford orbits, oracle agreement,
// Haar containment, parametrization round trip) at pinned tolerances.
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qmagic
