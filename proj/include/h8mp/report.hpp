#pragma once

#include <string>
#include <vector>

namespace h8mp {

struct CheckResult {
  std::string axiom;
  bool ok = false;
  std::string witness;  // first counterexample, empty when ok
};

// Outcome of an exhaustive axiom verification. Failures are entries, not errors.
struct AxiomReport {
  std::vector<CheckResult> checks;

  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.ok) return &c;
    return nullptr;
  }

  std::string summary() const {
    std::string s;
    for (const auto& c : checks) {
      s += (c.ok ? "pass " : "FAIL ") + c.axiom;
      if (!c.ok && !c.witness.empty()) s += " at " + c.witness;
      s += "\n";
    }
    return s;
  }
};

}  // namespace h8mp
