// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All comparisons are exact.

#include "pizza/verify.hpp"

#include <iostream>

int main() {
  int failed = 0;
  for (const auto& def : pizza::acceptance_criteria()) {
    auto r = pizza::run_criterion(def);
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.suite << "] " << r.title << ": "
              << r.detail << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
