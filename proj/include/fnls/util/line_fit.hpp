#pragma once

#include <span>

namespace fnls {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean square of the residuals
};

// Ordinary least squares y ~ slope * x + intercept, at least two points.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace fnls
