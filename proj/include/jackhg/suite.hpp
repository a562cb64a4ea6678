#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jackhg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Runs the verification matrix. full=false is the smoke level (n <= 2,
/// maxdeg <= 3, one parameter draw per case). All randomness flows from
/// the seed; identical (seed, level) give identical reports.
SuiteReport run_suite(bool full, std::uint64_t seed);

}  // namespace jackhg
