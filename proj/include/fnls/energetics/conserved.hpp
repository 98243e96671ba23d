#pragma once

#include "fnls/spectral/field.hpp"

namespace fnls {

// (2 pi)^d sum |u^(k)|^2.
double mass(const SpectralField& u);

// 1/2 ||D|^{alpha/2} u|^2 + sign/(2 sigma + 2) ||u||_{2 sigma + 2}^{2 sigma + 2}; the
// potential term by quadrature on a grid padded to resolve the product.
double energy(const SpectralField& u, double alpha, int sign, int sigma = 1);

}  // namespace fnls
