#pragma once

#include "fnls/spectral/field.hpp"

namespace fnls {

// Smooth cutoff: 1 for r <= 1, 0 for r >= 2, built from the exp(-c/tau)
// smooth step on tau = r - 1.
double lp_cutoff(double r);

// psi(r) = chi(r) - chi(2r), supported in (1/2, 2).
double lp_bump(double r);

double lp_bump_derivative(double r);

// j >= 1: multiply by psi(|k| / 2^j). j = 0: the low block u - sum_{j>=1}.
// Requires 2^{j+1} <= m/2.
SpectralField lp_project(const SpectralField& f, int j);

// Largest j accepted by lp_project on this grid.
int lp_max_block(const TorusGrid& grid);

}  // namespace fnls
