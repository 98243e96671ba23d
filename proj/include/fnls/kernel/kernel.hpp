#pragma once

#include <Eigen/Core>

#include "fnls/spectral/grid.hpp"

namespace fnls {

// kappa_N(x_j, t) = sum_k psi(|k|/N) e^{i(k.x_j - |k|^alpha t)} on every node.
// Requires m/2 >= 2N and finite t.
Eigen::ArrayXcd kernel_eval(int N, double alpha, double t, const TorusGrid& grid);

// Piecewise bound omega_N(t) on sup_x |kappa_N(x, t)| with unit constants:
//   N^d                          |t| <= N^-alpha
//   N^{d - d alpha/2} |t|^{-d/2}  up to N^{1-alpha} (alpha > 1) or 1
//   N^{d alpha/2} |t|^{d/2}       N^{1-alpha} < |t| <= 1, alpha > 1 only
class DecayEnvelope {
 public:
  DecayEnvelope(int N, double alpha, int d);

  double operator()(double t) const;
  double flat_end() const noexcept { return flat_end_; }
  // +inf when alpha < 1.
  double rising_start() const noexcept { return rising_start_; }

 private:
  int N_;
  double alpha_;
  int d_;
  double flat_end_;
  double rising_start_;
};

double decay_envelope(int N, double alpha, int d, double t);

// Smallest power of two m with m >= oversample * 2N, oversample >= 2.
int kernel_grid_points(int N, int oversample = 4);

}  // namespace fnls
