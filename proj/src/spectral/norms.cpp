#include "fnls/spectral/norms.hpp"

#include <cmath>
#include <string>

#include "fnls/error.hpp"

namespace fnls {

double sobolev_norm(const SpectralField& f, double s) {
  const TorusGrid& g = f.grid();
  const Eigen::ArrayXd w = (1.0 + g.k_squared()).pow(s);
  return std::sqrt(g.volume() * (w * f.coeff().abs2()).sum());
}

double lebesgue_norm(const Eigen::ArrayXcd& samples, const TorusGrid& grid, double p) {
  if (!(p >= 1.0)) throw DomainError("Lebesgue exponent must be >= 1, got " + std::to_string(p));
  if (samples.size() != grid.size()) throw DimensionError("sample count does not match grid");
  const Eigen::ArrayXd a = samples.abs();
  if (std::isinf(p)) return a.maxCoeff();
  if (p == 2.0) return std::sqrt(grid.cell_volume() * a.square().sum());
  return std::pow(grid.cell_volume() * a.pow(p).sum(), 1.0 / p);
}

std::complex<double> inner_product(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid() == g.grid())) throw DimensionError("fields live on different grids");
  return f.grid().volume() * (f.coeff() * g.coeff().conjugate()).sum();
}

double squared_l2(const SpectralField& f) {
  return f.grid().volume() * f.coeff().abs2().sum();
}

}  // namespace fnls
