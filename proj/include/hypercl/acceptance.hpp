#pragma once

#include <string>
#include <vector>

namespace hypercl {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Number of acceptance criteria.
constexpr int kCriterionCount = 9;

CriterionResult run_criterion(int id);

/// Runs every criterion on up to `threads` workers; results are in id order.
std::vector<CriterionResult> run_acceptance(unsigned threads);

/// Worker count from HYPERCL_THREADS, defaulting to the hardware count.
unsigned worker_count_from_env();

}  // namespace hypercl
