#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfid {

struct SuiteResult {
  std::string name;
  std::string property;  // the inequality or identity being checked
  int trials = 0;
  int failures = 0;
  std::vector<std::string> messages;  // first few failure details

  bool passed() const { return failures == 0; }
};

// Registered property suites, each driving seeded random instances against one
// family of inequalities. `trials <= 0` selects the suite's default count.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int trials = 0);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int trials = 0);

}  // namespace qfid
