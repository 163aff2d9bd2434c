// One line per acceptance criterion; exit status is nonzero if any fails.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "hypercl/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace hypercl;
  std::vector<CriterionResult> results;
  if (argc > 1) {
    for (int k = 1; k < argc; ++k) results.push_back(run_criterion(std::atoi(argv[k])));
  } else {
    results = run_acceptance(worker_count_from_env());
  }
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s (%.2fs / %.0fs budget) %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.budget_seconds, r.detail.c_str());
    failed += !r.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}
