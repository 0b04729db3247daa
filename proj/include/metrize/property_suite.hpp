#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace metrize {

struct SuiteConfig {
  std::uint64_t seed = 0;
  int trials = 100;
  int max_size = 4;
};

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;      // message of the first counterexample
  std::uint64_t replay_seed = 0;  // seed reproducing it
};

// Runs every module invariant on seeded random instances. Deterministic in
// the config; failures are results, not exceptions.
std::vector<PropertyResult> run_property_suite(const SuiteConfig& config);

}  // namespace metrize
