// Acceptance suite: runs every verification criterion and prints one
// pass/fail line each. Exit status is the number of failed criteria.
// Optional arguments select individual criteria by number.

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "gorcol/verify.hpp"

int main(int argc, char** argv) {
  std::vector<gorcol::CriterionResult> results;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) results.push_back(gorcol::run_criterion(std::atoi(argv[i])));
  } else {
    results = gorcol::run_all_criteria();
  }
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL", r.number,
                r.title.c_str(), r.elapsed_ms);
    if (!r.detail.empty()) std::printf("       %s\n", r.detail.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu of %zu criteria passed\n", results.size() - failed, results.size());
  return failed;
}
