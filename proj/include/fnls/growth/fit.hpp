#pragma once

#include <span>

namespace fnls {

// (2n + alpha)/(alpha - d), only for alpha > d.
double growth_bound(double alpha, int d, int n);

struct ExponentFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  int samples = 0;
};

// Slope of log value against log(1 + t) over t >= burn_in. Needs at least 8
// samples whose (1 + t) spans a decade.
ExponentFit fit_growth_exponent(std::span<const double> times, std::span<const double> values,
                                double burn_in = 1.0);

}  // namespace fnls
