#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fnls/evolution/params.hpp"
#include "fnls/evolution/run_record.hpp"
#include "fnls/growth/accumulation.hpp"
#include "fnls/growth/experiment.hpp"
#include "fnls/growth/gronwall.hpp"
#include "fnls/growth/initial_data.hpp"
#include "fnls/kernel/strichartz.hpp"

namespace fnls::cli {

struct Violation {
  std::string path;
  std::string message;
};

struct EnvelopeJob {
  double alpha = 0.0;
  int d = 1;
  std::vector<int> Ns;
  int time_points = 64;
  double lower_factor = 0.25;
  double max_abs_slope = 0.2;
};

struct StrichartzJob {
  double alpha = 0.0;
  int d = 1;
  double p = 2.0;
  std::vector<int> Ns;
  double tolerance = 0.15;
  StrichartzOptions options;
};

struct EvolveJob {
  EquationParams params{1, 2.0};
  int m = 64;
  double T = 1.0;
  double dt = 1e-3;
  int sample_every = 1;
  InitialDataSpec u0;
  DiagnosticsPlan plan;
  std::optional<double> max_mass_drift;
  std::optional<double> max_energy_drift;
};

struct GrowthJob {
  GrowthExperimentConfig config;
  double slack = 0.1;
  std::optional<double> max_energy_norm_drift;
  std::optional<AccumulationConfig> accumulation;
};

struct GronwallJob {
  GronwallSpec spec;
  double T = 1e4;
};

struct LeibnizJob {
  int d = 1;
  int m = 64;
  std::array<int, 3> k{};
  std::array<int, 3> k2{};
  std::vector<double> s;
  double alpha = 1.5;
  double tolerance = 1e-10;
};

struct KernelDumpJob {
  int N = 8;
  double alpha = 2.0;
  int d = 1;
  double t = 0.0;
  int m = 0;
};

using Job = std::variant<EnvelopeJob, StrichartzJob, EvolveJob, GrowthJob, GronwallJob, LeibnizJob, KernelDumpJob>;

struct Experiment {
  std::string kind;
  std::string name;
  Job job;
};

struct RunConfig {
  std::filesystem::path output_dir;
  std::vector<Experiment> experiments;
};

class ConfigFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads and parses JSON; ConfigFileError when unreadable or malformed.
nlohmann::json read_config_file(const std::filesystem::path& path);

// Every violation is collected, experiments with violations are dropped.
RunConfig parse_config(const nlohmann::json& doc, std::vector<Violation>& violations);

}  // namespace fnls::cli
