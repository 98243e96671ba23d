#pragma once

#include <Eigen/Core>

#include "fnls/evolution/params.hpp"
#include "fnls/spectral/field.hpp"

namespace fnls {

// e^{-it|D|^alpha}: coefficient at k times e^{-i|k|^alpha t}.
SpectralField linear_propagate(const SpectralField& f, double alpha, double t);

// Highest retained |k_i| for the (2 sigma + 1)-fold nonlinearity: floor(m/(sigma+2)).
int dealias_cutoff(int m, int sigma);

// Zeroes every coefficient with some |k_i| > dealias_cutoff(m, sigma).
SpectralField dealias(const SpectralField& f, int sigma);
Eigen::ArrayXd dealias_mask(const TorusGrid& grid, int sigma);

// One Strang step with precomputed half-step phases.
class SplitStepper {
 public:
  SplitStepper(const TorusGrid& grid, double dt, const EquationParams& params);

  void advance(SpectralField& u) const;
  double dt() const noexcept { return dt_; }

 private:
  TorusGrid grid_;
  EquationParams params_;
  double dt_;
  Eigen::ArrayXcd half_;
  Eigen::ArrayXd mask_;
};

// Half linear step, pointwise phase u <- e^{-i sign |u|^{2 sigma} dt} u,
// dealias, half linear step.
SpectralField splitstep_step(const SpectralField& u, double dt, const EquationParams& params);

}  // namespace fnls
