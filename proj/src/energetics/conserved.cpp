#include "fnls/energetics/conserved.hpp"

#include <cmath>

#include "fnls/error.hpp"
#include "fnls/spectral/multiplier.hpp"
#include "fnls/spectral/norms.hpp"
#include "padded.hpp"

namespace fnls {

double mass(const SpectralField& u) { return squared_l2(u); }

double energy(const SpectralField& u, double alpha, int sign, int sigma) {
  if (sigma < 1) throw DomainError("sigma must be a positive integer");
  const double kinetic = 0.5 * squared_l2(apply_fractional_power(u, 0.5 * alpha));
  const auto p = detail::padded(u, product_padding(sigma));
  const Eigen::ArrayXd a2 = p.samples.abs2();
  const double potential = detail::integrate(a2.pow(sigma + 1), p.grid) / (2.0 * sigma + 2.0);
  return kinetic + sign * potential;
}

}  // namespace fnls
