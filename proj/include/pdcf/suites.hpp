#ifndef PDCF_SUITES_HPP
#define PDCF_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdcf/partition.hpp"
#include "pdcf/stattest.hpp"

namespace pdcf {

struct SuiteOptions {
  Params params{0.5, 0.5};
  std::uint64_t seed = 42;
  std::size_t samples = 100000;  // replicas for the headline KS tests
  double level = 0.001;
  double pitman_beta = 0.6;  // second index of the Pitman duality pair
  int tree_size = 10000;
  int tree_replicas = 2000;
  int urn_steps = 10000;
  int urn_replicas = 10000;
};

struct SuiteReport {
  std::string suite;
  Params params;
  std::uint64_t seed = 0;
  std::vector<TestResult> tests;
  bool pass = true;
};

// Suite names accepted by run_suite (plus "all").
const std::vector<std::string>& suite_names();

// Runs one named verification suite; throws std::invalid_argument for an
// unknown name or unusable parameters (e.g. subordinator with theta <= 0).
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

nlohmann::json to_json(const SuiteReport& r);

}  // namespace pdcf

#endif
