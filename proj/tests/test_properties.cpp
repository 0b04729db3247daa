#include <doctest.h>

#include "metrize/property_suite.hpp"

using namespace metrize;

TEST_CASE("property suite sanity run") {
  SuiteConfig config;
  config.seed = 42;
  config.trials = 25;
  config.max_size = 4;
  auto results = run_property_suite(config);
  for (const auto& r : results) {
    INFO(r.name, ": ", r.first_failure, " (replay ", r.replay_seed, ")");
    CHECK(r.failures == 0);
  }
}

TEST_CASE("property suite is deterministic") {
  SuiteConfig config;
  config.seed = 7;
  config.trials = 3;
  config.max_size = 3;
  auto a = run_property_suite(config);
  auto b = run_property_suite(config);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].failures == b[i].failures);
    CHECK(a[i].first_failure == b[i].first_failure);
  }
}
