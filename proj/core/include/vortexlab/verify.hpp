#pragma once

// One-shot verification sweep over every module's invariants with canonical
// parameter sets. Each check reports the measured quantity and the bound it
// was held to; the CLI renders the list as a machine-readable report.

#include <string>
#include <vector>

namespace vortexlab {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
};

struct VerifyOptions {
  // Test hook: "wall_constant" perturbs the solved constant so the failure
  // path of consumers can be exercised. Empty in normal operation.
  std::string inject_fault;
};

std::vector<VerifyCheck> run_verification(const VerifyOptions& opt = {});

}  // namespace vortexlab
