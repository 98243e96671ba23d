#include "fnls/spectral/littlewood_paley.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "fnls/error.hpp"

namespace fnls {

namespace {

// Rate of the exp(-c/tau) smooth step. c = 2 minimises the Fourier tail of psi
// over frequencies 140..700 within this family.
constexpr double kStepRate = 2.0;

// 1 at tau = 0, 0 at tau = 1: e^{-c/(1-tau)} / (e^{-c/(1-tau)} + e^{-c/tau}).
double step(double tau) {
  if (tau <= 0.0) return 1.0;
  if (tau >= 1.0) return 0.0;
  return 1.0 / (1.0 + std::exp(kStepRate * (1.0 / (1.0 - tau) - 1.0 / tau)));
}

double step_derivative(double tau) {
  if (tau <= 0.0 || tau >= 1.0) return 0.0;
  const double s = step(tau);
  const double dg = kStepRate * (1.0 / ((1.0 - tau) * (1.0 - tau)) + 1.0 / (tau * tau));
  return -s * (1.0 - s) * dg;
}

Eigen::ArrayXd radial_symbol(const TorusGrid& g, double scale) {
  std::unordered_map<double, double> memo;
  const Eigen::ArrayXd& ksq = g.k_squared();
  Eigen::ArrayXd sym(ksq.size());
  for (Eigen::Index i = 0; i < ksq.size(); ++i) {
    auto [it, fresh] = memo.try_emplace(ksq(i), 0.0);
    if (fresh) it->second = lp_bump(std::sqrt(ksq(i)) / scale);
    sym(i) = it->second;
  }
  return sym;
}

}  // namespace

double lp_cutoff(double r) { return step(r - 1.0); }

double lp_bump(double r) { return lp_cutoff(r) - lp_cutoff(2.0 * r); }

double lp_bump_derivative(double r) { return step_derivative(r - 1.0) - 2.0 * step_derivative(2.0 * r - 1.0); }

int lp_max_block(const TorusGrid& grid) {
  int j = 0;
  while ((2 << (j + 1)) <= grid.points() / 2) ++j;
  return j;
}

SpectralField lp_project(const SpectralField& f, int j) {
  const TorusGrid& g = f.grid();
  if (j < 0) throw DomainError("block index must be non-negative");
  if (j > lp_max_block(g))
    throw ResolutionError("block 2^" + std::to_string(j) + " is not resolvable on m=" +
                          std::to_string(g.points()));
  if (j >= 1) {
    const Eigen::ArrayXd sym = radial_symbol(g, std::ldexp(1.0, j));
    return SpectralField(g, f.coeff() * sym.cast<std::complex<double>>());
  }
  // Every block touching the grid, i.e. until 2^{b-1} exceeds the largest |k|.
  const double kmax = std::sqrt(g.k_squared().maxCoeff());
  Eigen::ArrayXd sym = Eigen::ArrayXd::Ones(g.size());
  for (int b = 1; std::ldexp(1.0, b - 1) < 2.0 * kmax; ++b) sym -= radial_symbol(g, std::ldexp(1.0, b));
  return SpectralField(g, f.coeff() * sym.cast<std::complex<double>>());
}

}  // namespace fnls
