#include "fnls/kernel/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/error.hpp"

namespace fnls {

namespace {

void check(double alpha, double p, int d, const char* where) {
  if (!(alpha > 0.0)) throw DomainError(std::string(where) + ": alpha must be positive");
  if (alpha == 1.0) throw HalfWaveExcludedError(where);
  if (!(p >= 1.0)) throw DomainError(std::string(where) + ": p must be >= 1");
  if (d < 1) throw DomainError(std::string(where) + ": dimension must be >= 1");
}

}  // namespace

double dispersion_exponents(double alpha, double p, int d) {
  check(alpha, p, d, "dispersion_exponents");
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  if (alpha >= 2.0) return d * alpha / 2.0;
  if (alpha > 1.0 && !std::isinf(p) && 2.0 * alpha / (2.0 - alpha) >= p * d) return d * alpha / 2.0;
  return d - alpha * inv_p;
}

double wavepacket_scaling_exponent(double alpha, double p, int d) {
  check(alpha, p, d, "wavepacket_scaling_exponent");
  const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
  return std::max(d / 2.0 - alpha * inv_p / 2.0, 0.0);
}

}  // namespace fnls
