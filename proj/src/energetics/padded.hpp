#pragma once

#include <Eigen/Core>

#include "fnls/spectral/padding.hpp"
#include "fnls/spectral/transform.hpp"

namespace fnls::detail {

struct Padded {
  TorusGrid grid;
  SpectralField field;
  Eigen::ArrayXcd samples;
};

inline Padded padded(const SpectralField& u, int factor) {
  SpectralField up = factor == 1 ? u : zero_pad(u, factor);
  Eigen::ArrayXcd s = synthesize(up);
  return {up.grid(), std::move(up), std::move(s)};
}

// Mean over the grid times the torus volume.
inline double integrate(const Eigen::ArrayXd& samples, const TorusGrid& g) {
  return g.cell_volume() * samples.sum();
}

}  // namespace fnls::detail
