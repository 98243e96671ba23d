#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fnls/cli/config.hpp"

namespace fnls::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double limit = 0.0;
};

struct ExperimentOutcome {
  std::string name;
  std::string kind;
  std::vector<CheckResult> checks;
  std::string headline;   // short numeric summary
  std::string error;      // set when the experiment raised
  bool pass() const;
  std::string line() const;
};

// Runs one experiment and writes <name>.csv and <name>.json (plus kind
// specific extras) into dir.
ExperimentOutcome run_experiment(const Experiment& e, const std::filesystem::path& dir);

}  // namespace fnls::cli
