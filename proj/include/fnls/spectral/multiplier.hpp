#pragma once

#include <vector>

#include <Eigen/Core>

#include "fnls/spectral/field.hpp"

namespace fnls {

using MultiIndex = std::vector<int>;

// |D|^s: coefficient times |k|^s. At k = 0 the symbol is 0 for s > 0 and 1
// for s = 0; s < 0 requires a zero mean.
SpectralField apply_fractional_power(const SpectralField& f, double s);

// i^{-|beta|} d^beta_xi |xi|^s evaluated at xi = k, |beta| <= 2.
SpectralField apply_symbol_derivative(const SpectralField& f, double s, const MultiIndex& beta);

// d^beta_x, symbol (ik)^beta.
SpectralField apply_derivative(const SpectralField& f, const MultiIndex& beta);

// Coefficient-wise product with a real symbol given per flat index.
SpectralField apply_symbol(const SpectralField& f, const Eigen::ArrayXd& symbol);

// All multi-indices of length dim with |beta| = order, lexicographic.
std::vector<MultiIndex> multi_indices(int dim, int order);

// |k|^s per flat index with the k = 0 convention of apply_fractional_power.
Eigen::ArrayXd fractional_symbol(const TorusGrid& grid, double s);

}  // namespace fnls
