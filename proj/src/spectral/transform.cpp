#include "fnls/spectral/transform.hpp"

#include <string>

#include "fftw_backend.hpp"
#include "fnls/error.hpp"

namespace fnls {

SpectralField analyze(const Eigen::ArrayXcd& samples, const TorusGrid& grid) {
  if (samples.size() != grid.size())
    throw DimensionError("sample count " + std::to_string(samples.size()) +
                         " does not match grid size " + std::to_string(grid.size()));
  Eigen::ArrayXcd c(grid.size());
  detail::dft(samples.data(), c.data(), grid.dim(), grid.points(), -1);
  c /= static_cast<double>(grid.size());
  return SpectralField(grid, std::move(c));
}

Eigen::ArrayXcd synthesize(const SpectralField& f) {
  Eigen::ArrayXcd s(f.grid().size());
  detail::dft(f.coeff().data(), s.data(), f.grid().dim(), f.grid().points(), +1);
  return s;
}

}  // namespace fnls
