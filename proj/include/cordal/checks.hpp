// Named self-check suites exposed through `cordal check`. Each check
// exercises an algebraic identity on deterministic pseudo-random inputs
// and reports pass/fail with a short diagnostic.
#pragma once

#include <string>
#include <vector>

namespace cordal {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty on pass, first failure otherwise
};

// One suite per library module: "ring", "braid", "algebra", "action",
// "relations", "torus", "augment", "oracle", or "all".
std::vector<std::string> check_suite_names();
std::vector<CheckResult> run_check_suite(const std::string& suite, unsigned seed,
                                         int trials);

}  // namespace cordal
