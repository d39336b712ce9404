#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adcap {
namespace selftest {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double milliseconds = 0.0;
};

// Runs the full invariant suite (ten criteria, fixed seeds).  When live is
// non-null, one PASS/FAIL line is printed as each criterion completes.
std::vector<CriterionResult> run_acceptance(std::ostream* live);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace selftest
}  // namespace adcap
