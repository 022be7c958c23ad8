// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// conjunction.

#include <cstdio>

#include "witting/verify.hpp"

int main() {
  int failed = 0;
  int n = 0;
  for (const auto& check : witting::acceptance_checks()) {
    ++n;
    witting::CheckResult r;
    try {
      r = check.run();
    } catch (const std::exception& e) {
      r.name = check.topic;
      r.ok = false;
      r.diffs.push_back(std::string("exception: ") + e.what());
    }
    std::printf("criterion %2d %s  %-18s %8.3f s\n", n, r.ok ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    for (const auto& d : r.diffs) std::printf("    ! %s\n", d.c_str());
    failed += !r.ok;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
