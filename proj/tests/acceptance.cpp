// Acceptance runner: executes every verification suite and prints one
// pass/fail line per criterion. Exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "verify.hpp"

int main() {
  bool all_ok = true;
  int index = 0;
  for (const std::string& name : ucp::suite_names()) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    ucp::SuiteResult res;
    try {
      res = ucp::run_suite(name);
    } catch (const std::exception& e) {
      res.name = name;
      res.passed = false;
      res.lines = {std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("criterion %2d %-30s %s (%.2fs)\n", index, res.name.c_str(),
                res.passed ? "PASS" : "FAIL", secs);
    if (!res.passed) {
      all_ok = false;
      for (const std::string& line : res.lines)
        std::printf("    %s\n", line.c_str());
    }
  }
  return all_ok ? 0 : 1;
}
