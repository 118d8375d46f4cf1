#pragma once

#include <string>
#include <vector>

namespace ucp {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> lines;  // per-check details, failures first-class
};

// Suite names, in the canonical order they are reported.
std::vector<std::string> suite_names();

// Runs one verification suite; throws std::invalid_argument on an
// unknown name. "all" runs every suite and aggregates.
SuiteResult run_suite(const std::string& name);

}  // namespace ucp
