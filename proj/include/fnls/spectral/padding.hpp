#pragma once

#include "fnls/spectral/field.hpp"

namespace fnls {

// Power of two >= sigma + 1. Covers the (2 sigma + 2)-fold products used by
// the energies when inputs are dealiased.
int product_padding(int sigma);

// Embed coefficients into the grid with factor * m points per axis.
SpectralField zero_pad(const SpectralField& f, int factor);

// Keep the modes representable on target; target.points() must divide the
// source size.
SpectralField truncate(const SpectralField& f, const TorusGrid& target);

}  // namespace fnls
