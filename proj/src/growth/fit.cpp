#include "fnls/growth/fit.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fnls/error.hpp"
#include "fnls/util/line_fit.hpp"

namespace fnls {

double growth_bound(double alpha, int d, int n) {
  if (n < 0) throw DomainError("growth_bound: n must be >= 0");
  if (!(alpha > d))
    throw RegimeError("growth_bound: the polynomial bound needs alpha > d, got alpha = " + std::to_string(alpha) +
                      ", d = " + std::to_string(d));
  return (2.0 * n + alpha) / (alpha - d);
}

ExponentFit fit_growth_exponent(std::span<const double> times, std::span<const double> values, double burn_in) {
  if (times.size() != values.size()) throw DimensionError("fit_growth_exponent: times and values differ in length");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < burn_in) continue;
    if (!(values[i] > 0.0)) throw DomainError("fit_growth_exponent: values must be positive");
    x.push_back(std::log1p(times[i]));
    y.push_back(std::log(values[i]));
  }
  if (x.size() < 8)
    throw SpanError("fit_growth_exponent: " + std::to_string(x.size()) + " samples after burn-in, need 8");
  if (x.back() - x.front() < std::log(10.0) * (1.0 - 1e-12))
    throw SpanError("fit_growth_exponent: samples span less than a decade in 1 + t");
  const LineFit f = fit_line(x, y);
  return {f.slope, f.intercept, f.residual, static_cast<int>(x.size())};
}

}  // namespace fnls
