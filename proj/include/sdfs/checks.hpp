#pragma once

#include <string>
#include <vector>

namespace sdfs {

struct CheckResult {
  std::string name;
  double value = 0.0;      // worst observed residual
  double tolerance = 0.0;
  bool passed = false;
};

/// The invariant suite behind `sdfs_jcm check`: analytic amplitudes and
/// overlaps against the operator-exponential oracle, conservation, trace and
/// entropy bounds, phase and Q normalization, and scalar/SIMD kernel
/// agreement. Takes a few seconds.
std::vector<CheckResult> run_invariant_checks();

}  // namespace sdfs
