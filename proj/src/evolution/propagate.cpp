#include "fnls/evolution/propagate.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "fnls/error.hpp"
#include "fnls/spectral/multiplier.hpp"
#include "fnls/spectral/transform.hpp"

namespace fnls {

namespace {

Eigen::ArrayXcd propagator(const TorusGrid& g, double alpha, double t) {
  const Eigen::ArrayXd w = fractional_symbol(g, alpha);
  Eigen::ArrayXcd out(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) out(i) = i == 0 ? 1.0 : std::polar(1.0, -w(i) * t);
  return out;
}

}  // namespace

SpectralField linear_propagate(const SpectralField& f, double alpha, double t) {
  if (t == 0.0) return f;
  return SpectralField(f.grid(), f.coeff() * propagator(f.grid(), alpha, t));
}

int dealias_cutoff(int m, int sigma) {
  if (sigma < 1) throw DomainError("sigma must be a positive integer");
  return m / (sigma + 2);
}

Eigen::ArrayXd dealias_mask(const TorusGrid& grid, int sigma) {
  const double K = dealias_cutoff(grid.points(), sigma);
  Eigen::ArrayXd mask = Eigen::ArrayXd::Ones(grid.size());
  for (int a = 0; a < grid.dim(); ++a) mask *= (grid.k_component(a).abs() <= K).cast<double>();
  return mask;
}

SpectralField dealias(const SpectralField& f, int sigma) {
  return SpectralField(f.grid(), f.coeff() * dealias_mask(f.grid(), sigma).cast<std::complex<double>>());
}

SplitStepper::SplitStepper(const TorusGrid& grid, double dt, const EquationParams& params)
    : grid_(grid), params_(params), dt_(dt) {
  if (!(dt > 0.0)) throw DomainError("time step must be positive");
  if (grid.dim() != params.d())
    throw DimensionError("grid dimension " + std::to_string(grid.dim()) + " differs from equation dimension " +
                         std::to_string(params.d()));
  half_ = propagator(grid, params.alpha(), 0.5 * dt);
  mask_ = dealias_mask(grid, params.sigma());
}

void SplitStepper::advance(SpectralField& u) const {
  if (!(u.grid() == grid_)) throw DimensionError("field grid differs from the stepper grid");
  u.coeff() *= half_;
  Eigen::ArrayXcd s = synthesize(u);
  const double rate = params_.sign() * dt_;
  const int sigma = params_.sigma();
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double a2 = std::norm(s(i));
    const double w = sigma == 1 ? a2 : std::pow(a2, sigma);
    s(i) *= std::polar(1.0, -rate * w);
  }
  u = analyze(s, grid_);
  u.coeff() *= mask_;
  u.coeff() *= half_;
}

SpectralField splitstep_step(const SpectralField& u, double dt, const EquationParams& params) {
  SpectralField v = u;
  SplitStepper(u.grid(), dt, params).advance(v);
  return v;
}

}  // namespace fnls
