// Acceptance gate: one line per criterion, exact checks only.
// Exit status 0 iff every criterion passes.
#include <chrono>
#include <cstdio>
#include <string>

#include "jackhg/suite.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  constexpr std::uint64_t kSeed = 12345;

  auto t0 = clock::now();
  jackhg::SuiteReport full = jackhg::run_suite(true, kSeed);
  double full_s = std::chrono::duration<double>(clock::now() - t0).count();

  auto t1 = clock::now();
  jackhg::SuiteReport smoke = jackhg::run_suite(false, kSeed);
  double smoke_s = std::chrono::duration<double>(clock::now() - t1).count();

  bool all_pass = true;
  int k = 0;
  for (const auto& c : full.checks) {
    ++k;
    all_pass = all_pass && c.pass;
    std::printf("criterion %d: %s — %s%s%s\n", k, c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.detail.empty() ? "" : ": ",
                c.detail.c_str());
  }

  bool budget = full_s < 600.0 && smoke_s < 30.0 && smoke.ok();
  all_pass = all_pass && budget;
  std::printf(
      "criterion %d: %s — runtime budget (full %.2fs < 600s, smoke %.2fs < "
      "30s, smoke ok=%s)\n",
      ++k, budget ? "PASS" : "FAIL", full_s, smoke_s,
      smoke.ok() ? "yes" : "no");

  return all_pass ? 0 : 1;
}
