#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fnls/growth/fit.hpp"

namespace fnls {

// Named drivers g(t) = <t>^power with <t> = sqrt(1 + t^2); power 0 is g = 1.
struct Driver {
  double power = 0.0;
  double operator()(double t) const;
  std::string name() const;
};

// Variant 1 uses (lambda, beta); variant 2 uses (lambda, A, p, g).
struct GronwallTerm {
  double lambda = 1.0;
  double beta = 0.0;
  double A = 0.0;
  double p = 1.0;   // may be infinity
  Driver g;
};

struct GronwallSpec {
  int variant = 1;
  std::vector<GronwallTerm> terms;
  double f0 = 1.0;

  void validate() const;
  nlohmann::json to_json() const;
};

struct GronwallResult {
  std::vector<double> times;
  std::vector<double> values;
  ExponentFit fit;      // over the last two decades of [0, T]
  double predicted = 0.0;
  std::vector<double> measured_A;   // variant 2: cumulative-norm exponents of each g

  nlohmann::json summary() const;
};

// max (beta_k + 1)/lambda_k
double gronwall_alpha_star(const GronwallSpec& spec);
// max (A_k + 1/p_k')/lambda_k
double gronwall_gamma(const GronwallSpec& spec);

// Growth exponent of t -> ||g||_{L^p([0,t])} against log(1 + t).
double driver_norm_exponent(const Driver& g, double p, double T);

// Integrates f' = sum_k f^{1 - lambda_k} <t>^{beta_k} with explicit midpoint
// steps sized so that each step changes f by about 1e-4 relative.
GronwallResult gronwall_variant_oracle(const GronwallSpec& spec, double T);
// f' = sum_k f^{1 - lambda_k} g_k(t); each declared A_k is first checked against
// driver_norm_exponent to 0.05.
GronwallResult gronwall_variant2_oracle(const GronwallSpec& spec, double T);

}  // namespace fnls
