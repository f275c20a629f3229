#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kakutani/partition.hpp"

// Self-checking experiment suites. Each suite encodes one acceptance
// property with its thresholds fixed in code; `kakutani verify` and the
// acceptance test binary both run them.
namespace kakutani::verify {

struct SuiteResult {
  std::string name;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;  ///< runtime budget; 0 means none
  std::vector<std::string> details;

  bool within_budget() const { return budget_seconds <= 0 || seconds < budget_seconds; }
};

/// Suite names in acceptance order.
const std::vector<std::string>& suite_names();
bool has_suite(std::string_view name);

/// Runs one suite; `log` (optional) receives progress lines as they happen.
SuiteResult run_suite(std::string_view name, std::ostream* log = nullptr);

/// The rule matrix shared by the convergence, density and reordering suites.
std::vector<SplitRule> rule_matrix();

}  // namespace kakutani::verify
