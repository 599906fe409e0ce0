#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pluri {

struct RunConfig {
  int n = 0;                      // 0 selects each suite's default dimension set
  double strip = 0.9;
  double fdStep = 1e-3;
  std::int64_t mcSamples = 1'000'000;
  std::uint64_t seed = 20261015;
  double tolScale = 1.0;
};

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  bool pass = false;
  std::string error;  // non-empty if the suite aborted with an exception
};

/// Column-oriented numeric table for plot-ready output.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Names accepted by runSuite, excluding the aggregate "all".
const std::vector<std::string>& suiteNames();

bool isSuite(const std::string& name);

/// Runs one named suite. Never throws for numerical failures: an exception
/// inside a suite is caught and reported as a failed suite.
SuiteResult runSuite(const std::string& name, const RunConfig& cfg);

/// Density profile (n = 2), envelope gaps against degree, leaf extremality gaps.
std::vector<Table> plotTables(const RunConfig& cfg);

}  // namespace pluri
