#pragma once

#include <complex>
#include <limits>

#include <Eigen/Core>

#include "fnls/spectral/field.hpp"

namespace fnls {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// ((2pi)^d sum_k (1 + |k|^2)^s |u^(k)|^2)^{1/2}
double sobolev_norm(const SpectralField& f, double s);

// Equal-weight quadrature of |u|^p over the nodes; p = kInfinity gives the max.
double lebesgue_norm(const Eigen::ArrayXcd& samples, const TorusGrid& grid, double p);

// (f, g) = int f conj(g) = (2pi)^d sum_k f^(k) conj(g^(k))
std::complex<double> inner_product(const SpectralField& f, const SpectralField& g);

// ||f||^2_{L^2}
double squared_l2(const SpectralField& f);

}  // namespace fnls
