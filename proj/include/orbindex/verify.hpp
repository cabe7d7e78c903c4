#pragma once

#include <string>
#include <vector>

#include "orbindex/engine.hpp"

namespace orbindex {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string summary;                 // counts, scope
  std::vector<std::string> failures;   // empty when pass
};

// The full catalog verification suite: every criterion in exact arithmetic.
// Returns one result per criterion, in order.
std::vector<CheckResult> run_acceptance_suite(const EngineOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace orbindex
