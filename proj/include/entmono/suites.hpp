#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entmono {

/// Outcome of one randomized property suite run.
struct SuiteReport {
  std::string suite;
  long samples = 0;     // requested sample count (per regime/profile where applicable)
  long checks = 0;      // individual inequality checks performed
  long violations = 0;
  double max_violation = 0.0;  // largest observed overshoot past the slack
  double elapsed_seconds = 0.0;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one named property suite with `samples` draws. Sample i draws
/// from stream i of the seed, so results are deterministic and
/// independent of the worker count.
SuiteReport run_suite(const std::string& name, long samples, std::uint64_t seed, int workers = 1);

}  // namespace entmono
