#pragma once

#include <json.hpp>

#include "fnls/spectral/field.hpp"

namespace fnls {

struct ModifiedEnergyBreakdown {
  double j0 = 0.0;    // ||D|^{alpha+n} u|^2
  double mass = 0.0;
  double j1 = 0.0;
  double j2 = 0.0;
  double j3 = 0.0;    // general sigma only
  double total = 0.0;
  bool general = false;

  nlohmann::json to_json() const;
};

// Cubic case: j1 = 2 Re(|D|^{alpha+n} u, |D|^n(|u|^2 u)), j2 = -1/2 ||D|^{alpha/2+n}|u|^2|^2.
ModifiedEnergyBreakdown modified_energy(const SpectralField& u, double alpha, int n);

// Sums over multi-indices |beta| = n, each index counted once.
ModifiedEnergyBreakdown modified_energy_general(const SpectralField& u, double alpha, int n, int sigma);

struct GrowthConstants {
  double epsilon = 0.0;  // min{2 alpha/(2n + alpha), 1}
  double theta = 0.0;    // (alpha - d)/(2n + alpha)
};

GrowthConstants growth_constants(double alpha, int d, int n);

}  // namespace fnls
