#pragma once

#include <vector>

#include "fnls/evolution/params.hpp"
#include "fnls/spectral/field.hpp"

namespace fnls {

struct PicardOptions {
  int max_iters = 50;
  double tol = 1e-10;             // sup over time of the L^2 gap between iterates
  int initial_intervals = 256;
  int max_intervals = 1 << 15;
};

struct PicardResult {
  std::vector<double> times;
  std::vector<SpectralField> trajectory;
  int intervals = 0;
  int iterations = 0;              // at the accepted resolution
  std::vector<double> gaps;        // iterate gaps on the first grid, started from the linear flow
  double contraction_ratio = 0.0;  // largest gap_k / gap_{k-1} over all grids
  double refinement_shift = 0.0;   // change against the previous resolution
};

// Fixed point of the Duhamel map
//   u(t) = e^{-it|D|^a} u0 - i sign int_0^t e^{-i(t-s)|D|^a} dealias(|u|^{2 sigma} u)(s) ds
// with the trapezoid rule in s. The node count doubles from initial_intervals
// until the trajectory moves less than tol/10.
PicardResult picard_solve(const SpectralField& u0, double T, const EquationParams& params,
                          const PicardOptions& options);
PicardResult picard_solve(const SpectralField& u0, double T, const EquationParams& params, int max_iters,
                          double tol);

}  // namespace fnls
