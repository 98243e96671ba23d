#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "fnls/evolution/run_record.hpp"
#include "fnls/growth/fit.hpp"

namespace fnls {

struct AccumulationConfig {
  double p = 2.0;         // > 1
  double gamma = 1.0;
  double gamma0 = 0.5;    // gamma > gamma0
  double b = 0.6;         // in (1/2, 1)
  double b_prime = 0.2;   // b + b' < 1
  double A = 0.0;         // >= 0

  void validate() const;
  double reference_exponent() const;  // 1 + A + 2A/(1 - b - b')
};

struct AccumulationResult {
  std::vector<double> horizons;     // T values, the record times after t = 0
  std::vector<double> cumulative;   // ||w||_{L^{2p}([0, T])}
  ExponentFit fit;
  double reference = 0.0;

  nlohmann::json summary() const;
};

// w(t) = sup_x ||D|^{gamma - gamma0} u(t)|, read from the record column
// sup_fractional_column(gamma - gamma0); the time norm by the trapezoidal rule.
AccumulationResult strichartz_accumulation(const RunRecord& record, const AccumulationConfig& acc,
                                           double burn_in = 1.0);
AccumulationResult strichartz_accumulation(std::span<const double> times, std::span<const double> w,
                                           const AccumulationConfig& acc, double burn_in = 1.0);

}  // namespace fnls
