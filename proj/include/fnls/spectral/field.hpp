#pragma once

#include <array>
#include <complex>

#include <Eigen/Core>

#include "fnls/spectral/grid.hpp"

namespace fnls {

// Fourier coefficients u^(k) on a TorusGrid, u(x) = sum_k u^(k) e^{ikx}.
class SpectralField {
 public:
  explicit SpectralField(const TorusGrid& grid);
  SpectralField(const TorusGrid& grid, Eigen::ArrayXcd coeff);

  static SpectralField mode(const TorusGrid& grid, const std::array<int, 3>& k,
                            std::complex<double> amplitude = 1.0);

  const TorusGrid& grid() const noexcept { return grid_; }
  const Eigen::ArrayXcd& coeff() const noexcept { return coeff_; }
  Eigen::ArrayXcd& coeff() noexcept { return coeff_; }

  std::complex<double> at(const std::array<int, 3>& k) const;
  std::complex<double>& at(const std::array<int, 3>& k);

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(std::complex<double> c);

 private:
  TorusGrid grid_;
  Eigen::ArrayXcd coeff_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(std::complex<double> c, SpectralField a);
SpectralField operator*(SpectralField a, std::complex<double> c);

// Coefficients of the pointwise conjugate: conj(u^(-k)).
SpectralField conjugate(const SpectralField& f);

// u(x - shift) with shift given in grid nodes per axis.
SpectralField translate(const SpectralField& f, const std::array<int, 3>& shift);

// Largest coefficient distance, grids must agree.
double max_abs_difference(const SpectralField& a, const SpectralField& b);

}  // namespace fnls
