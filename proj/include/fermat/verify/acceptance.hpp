#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fermat::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

/// Criteria 1-11 in order. Each returns its own pass/fail and detail.
std::vector<Criterion> criteria();

/// Runs every criterion and the end-to-end time budget (criterion 12).
std::vector<CriterionResult> run_all();

/// "[PASS] 1 poincare-printed-values (0.01s): detail"
std::string format(const CriterionResult& r);

}  // namespace fermat::acceptance
