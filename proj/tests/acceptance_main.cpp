// Acceptance gate: runs every self-verification check at full ranges and
// prints one line per criterion.  Exit status 0 only when all pass.

#include <cstdio>

#include "ltt/suite.hpp"

int main() {
  ltt::SuiteOptions opt;
  opt.quick = false;
  const ltt::SuiteResult result = ltt::run_suite(opt);

  int criterion = 0;
  bool all_ok = true;
  for (const ltt::SuiteCheck& check : result.checks) {
    ++criterion;
    all_ok = all_ok && check.passed;
    std::printf("criterion %2d  %-22s  %s  [%6.2fs]  %s\n", criterion,
                check.name.c_str(), check.passed ? "pass" : "FAIL",
                check.seconds, check.detail.c_str());
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                             : "acceptance: FAILURES PRESENT");
  return all_ok ? 0 : 1;
}
