// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <iostream>

#include "oco/acceptance.hpp"

int main() {
  bool ok = true;
  for (const auto& r : oco::acceptance::run_all(&std::cout)) ok = ok && r.passed;
  return ok ? 0 : 1;
}
