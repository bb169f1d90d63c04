#pragma once

// Acceptance suite: eleven end-to-end checks of the full pipeline at fixed,
// seeded scales.  Each criterion is pinned in code (corpus sizes, seeds,
// tolerances) so two runs of the suite see identical inputs.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "doily/detector.hpp"
#include "doily/graph.hpp"

namespace doily {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // scale and violation counts, for the report line
};

struct AcceptanceOptions {
  bool quick = false;           // reduced scales, same structure
  std::ostream* log = nullptr;  // one line per criterion as it finishes
  // Detection entry point under test; defaults to sequential run_full.
  // Swappable so the meta-test can verify a corrupted detector is caught.
  std::function<DetectorOutcome(const Graph&)> detect;
};

// Runs all eleven criteria in order and returns their results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace doily
