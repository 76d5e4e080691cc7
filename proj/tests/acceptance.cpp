// Runs the ten acceptance criteria; one summary line each, followed by the
// sub-check lines.  Optional arguments select criterion ids.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "oscwhit/verify.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= oscwhit::kCriterionCount; ++i) ids.push_back(i);

  std::vector<oscwhit::CriterionResult> results;
  for (int id : ids) {
    auto r = oscwhit::run_criterion(id);
    std::printf("%s\n", r.summary_line().c_str());
    for (const auto& c : r.checks)
      std::printf("      %s  %s: %s\n", c.pass ? " ok" : "BAD", c.label.c_str(), c.detail.c_str());
    std::fflush(stdout);
    results.push_back(std::move(r));
  }

  int failed = 0;
  std::printf("\nsummary\n");
  for (const auto& r : results) {
    std::printf("%s\n", r.summary_line().c_str());
    failed += !r.pass;
  }
  std::printf("%d of %zu criteria passed\n", int(results.size()) - failed, results.size());
  return failed ? 1 : 0;
}
