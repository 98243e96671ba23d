#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "fnls/evolution/params.hpp"
#include "fnls/evolution/run_record.hpp"
#include "fnls/growth/fit.hpp"
#include "fnls/growth/initial_data.hpp"

namespace fnls {

struct GrowthExperimentConfig {
  EquationParams params{1, 2.0};
  int m = 64;
  InitialDataSpec u0;
  double T = 10.0;
  double dt = 1e-3;
  int n = 0;                       // order of the tracked H^{alpha+n} norm
  std::vector<double> sobolev;     // extra H^s norms; alpha + n and alpha/2 always sampled
  std::vector<double> sup_fractional;
  std::vector<int> modified_energy;
  int sample_every = 10;
  double burn_in = 1.0;
};

// Raises on T/dt > 1e8 or an unusable grid.
void validate(const GrowthExperimentConfig& config);

struct NormExponent {
  double s = 0.0;
  ExponentFit fit;
};

struct GrowthResult {
  RunRecord record;
  double s_tracked = 0.0;                 // alpha + n
  ExponentFit tracked;                    // fit of the H^{alpha+n} norm
  std::vector<NormExponent> exponents;    // every sampled Sobolev norm
  std::optional<double> bound;            // only when alpha > d
  double energy_norm_drift = 0.0;         // relative drift of the H^{alpha/2} norm

  nlohmann::json summary() const;
};

GrowthResult growth_experiment(const GrowthExperimentConfig& config);

}  // namespace fnls
