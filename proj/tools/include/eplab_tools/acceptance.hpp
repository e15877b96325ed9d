#pragma once

#include <functional>
#include <string>
#include <vector>

namespace eplab::tools {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 11;

/// Runs the numbered acceptance criteria (all when `only` is empty) and
/// reports each result to `sink` as soon as it is known.
std::vector<CriterionResult> run_acceptance(
    const std::vector<int>& only = {},
    const std::function<void(const CriterionResult&)>& sink = {});

/// "PASS [3] scale-factor blowup: ..." (one line).
std::string format_result(const CriterionResult& r);

}  // namespace eplab::tools
