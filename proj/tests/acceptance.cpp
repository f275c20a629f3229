// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Thresholds live in the verify suites; runtime budgets are enforced here too.
#include <cstdio>
#include <iostream>

#include "kakutani/verify.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failures = 0;
  int index = 0;
  for (const auto& name : kakutani::verify::suite_names()) {
    ++index;
    const auto r = kakutani::verify::run_suite(name, nullptr);
    const bool ok = r.passed && r.within_budget();
    failures += !ok;
    std::printf("[%2d] %s  %-13s %8.3f s", index, ok ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    if (r.budget_seconds > 0) std::printf(" (budget %.0f s)", r.budget_seconds);
    std::printf("  %s\n", r.title.c_str());
    if (verbose || !ok)
      for (const auto& line : r.details) std::printf("       %s\n", line.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
