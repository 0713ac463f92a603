#ifndef QPP_ACCEPTANCE_HPP_
#define QPP_ACCEPTANCE_HPP_

#include <functional>
#include <string>
#include <vector>

namespace qpp::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs every criterion in order; on_result (if set) sees each result as
/// soon as it is available.
std::vector<CriterionResult> run_all(
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 Formula equivalence ... (1.2 s / 60 s) detail"
std::string format_line(const CriterionResult& r);

}  // namespace qpp::acceptance

#endif  // QPP_ACCEPTANCE_HPP_
