#pragma once

#include <string>
#include <vector>

#include "satspec/spectrum.hpp"

namespace satspec {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool report_only = false;  // evidence for open conjectures, never a failure
  std::string details;
  std::vector<std::string> counterexamples;  // graph6
};

struct VerifyReport {
  int n_max = 0;
  std::vector<int> k_set;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.report_only && !c.pass) return false;
    return true;
  }
};

// Sweeps every n <= n_max (k = 2 checks; k = 3 runs only when 3 is in k_set)
// and evaluates the saturation-number, spectrum, parity/base-structure,
// minimum-degree, path-plus-cycle, forest, single-block, hub-tree,
// wheel-base, base-transfer and K4-subdivision statements, plus
// report-only evidence for the open conjectures.
VerifyReport verify_theorems(int n_max, const std::vector<int>& k_set,
                             const ScanOptions& options = {});

}  // namespace satspec
