#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oco::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

int criterion_count();
CriterionResult run_criterion(int id);
// Runs every criterion in order; writes one PASS/FAIL line per criterion to `log` if given.
std::vector<CriterionResult> run_all(std::ostream* log);
std::string format_result(const CriterionResult& result);

}  // namespace oco::acceptance
