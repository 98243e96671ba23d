#pragma once

#include <Eigen/Core>

#include "fnls/spectral/field.hpp"
#include "fnls/spectral/grid.hpp"

namespace fnls {

// Node samples u(x_j) -> coefficients, forward DFT scaled by m^-d.
SpectralField analyze(const Eigen::ArrayXcd& samples, const TorusGrid& grid);

// Coefficients -> node samples u(x_j) = sum_k u^(k) e^{i k.x_j}.
Eigen::ArrayXcd synthesize(const SpectralField& f);

}  // namespace fnls
