#pragma once

#include <string>
#include <vector>

namespace smithkit::cli {

struct GoldenResult {
  std::string anchor;
  bool pass = false;
  std::string detail;
  /// Informational rows are printed but never fail the run.
  bool note = false;
};

/// Recomputes every displayed example; `full` adds the multi-second checks.
std::vector<GoldenResult> run_golden_suite(bool full);

}  // namespace smithkit::cli
