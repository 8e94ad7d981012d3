#pragma once

#include <string>
#include <vector>

#include "ltt/jsonio.hpp"

namespace ltt {

// One named self-verification check: a batch of cross-validations for a
// single module boundary, with a one-line summary of the worst case seen.
struct SuiteCheck {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct SuiteOptions {
  bool quick = false;  // reduced ranges, same coverage shape
  int jobs = 1;        // checks run concurrently when > 1; output stays ordered
  // Test hook: when nonzero, one closed-form table value inside the first
  // check is deliberately perturbed so harnesses can confirm that failures
  // propagate to the exit code.
  int inject_fault = 0;
};

struct SuiteResult {
  std::vector<SuiteCheck> checks;
  bool all_passed() const;
  // Timing is reported in the text table only; the JSON form must serialize
  // to identical bytes across reruns.
  Json to_json(const std::string& profile) const;
  std::string to_table(bool color) const;
};

SuiteResult run_suite(const SuiteOptions& opt = {});

}  // namespace ltt
