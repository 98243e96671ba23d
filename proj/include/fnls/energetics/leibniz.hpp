#pragma once

#include "fnls/io/csv.hpp"
#include "fnls/spectral/field.hpp"

namespace fnls {

// F_alpha(u) = u |D|^alpha conj(u) + conj(u) |D|^alpha u - |D|^alpha |u|^2.
// Products are exact, so the result lives on the grid padded by 2.
SpectralField commutator(const SpectralField& u, double alpha);

// order 1: |D|^s(fg) - f|D|^s g - g|D|^s f
// order 2: the same plus s |D|^{s-2}(grad f . grad g), needs s >= 2.
// Result on the grid padded by 2.
SpectralField leibniz_defect(const SpectralField& f, const SpectralField& g, double s, int order);

// Nonzero coefficients: k0[,k1[,k2]], re, im.
CsvTable coefficient_table(const SpectralField& f);

}  // namespace fnls
