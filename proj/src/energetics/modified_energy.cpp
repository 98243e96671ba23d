#include "fnls/energetics/modified_energy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fnls/error.hpp"
#include "fnls/spectral/multiplier.hpp"
#include "fnls/spectral/norms.hpp"
#include "padded.hpp"

namespace fnls {

namespace {

void check(double alpha, int n) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (n < 0) throw DomainError("modified energy order must be >= 0, got " + std::to_string(n));
}

// 2 Re(|D|^{alpha+n} u, |D|^n(|u|^{2 sigma} u)) on the padded grid.
double j1_term(const detail::Padded& p, double alpha, int n, int sigma) {
  const Eigen::ArrayXd a2 = p.samples.abs2();
  const Eigen::ArrayXcd nl = p.samples * (sigma == 1 ? a2 : a2.pow(sigma)).cast<std::complex<double>>();
  const SpectralField lhs = apply_fractional_power(p.field, alpha + n);
  const SpectralField rhs = apply_fractional_power(analyze(nl, p.grid), n);
  return 2.0 * inner_product(lhs, rhs).real();
}

}  // namespace

nlohmann::json ModifiedEnergyBreakdown::to_json() const {
  nlohmann::json j{{"j0", j0}, {"mass", mass}, {"j1", j1}, {"j2", j2}, {"total", total}};
  if (general) j["j3"] = j3;
  return j;
}

ModifiedEnergyBreakdown modified_energy(const SpectralField& u, double alpha, int n) {
  check(alpha, n);
  ModifiedEnergyBreakdown b;
  b.mass = squared_l2(u);
  b.j0 = squared_l2(apply_fractional_power(u, alpha + n));
  const auto p = detail::padded(u, 2);
  b.j1 = j1_term(p, alpha, n, 1);
  const SpectralField rho = analyze(p.samples.abs2().cast<std::complex<double>>(), p.grid);
  b.j2 = -0.5 * squared_l2(apply_fractional_power(rho, 0.5 * alpha + n));
  b.total = b.mass + b.j0 + b.j1 + b.j2;
  return b;
}

ModifiedEnergyBreakdown modified_energy_general(const SpectralField& u, double alpha, int n, int sigma) {
  check(alpha, n);
  if (sigma < 1) throw DomainError("sigma must be a positive integer");
  ModifiedEnergyBreakdown b;
  b.general = true;
  b.mass = squared_l2(u);
  b.j0 = squared_l2(apply_fractional_power(u, alpha + n));

  // |u|^{2 sigma} must be representable before multipliers act on it.
  const int factor = static_cast<int>(std::bit_ceil(static_cast<unsigned>(2 * sigma)));
  const auto p = detail::padded(u, factor);
  const TorusGrid& g = p.grid;
  b.j1 = j1_term(p, alpha, n, sigma);

  const Eigen::ArrayXd a2 = p.samples.abs2();
  const Eigen::ArrayXd a2s = a2.pow(sigma);
  const Eigen::ArrayXd weight = a2.pow(sigma - 1);
  const SpectralField rho = apply_fractional_power(analyze(a2.cast<std::complex<double>>(), g), 0.5 * alpha);
  const SpectralField rho_s = apply_fractional_power(analyze(a2s.cast<std::complex<double>>(), g), 0.5 * alpha);
  const SpectralField du = apply_fractional_power(p.field, 0.5 * alpha);

  for (const MultiIndex& beta : multi_indices(g.dim(), n)) {
    const Eigen::ArrayXd a = synthesize(apply_derivative(rho, beta)).real();
    const Eigen::ArrayXcd c = synthesize(apply_derivative(du, beta));
    const Eigen::ArrayXd x = a - 2.0 * (p.samples.conjugate() * c).real();
    const Eigen::ArrayXd y = synthesize(apply_derivative(rho_s, beta)).real();
    b.j2 += detail::integrate(x * y, g);
    b.j3 += -0.5 * sigma * detail::integrate(a.square() * weight, g);
  }
  b.total = b.mass + b.j0 + b.j1 + b.j2 + b.j3;
  return b;
}

GrowthConstants growth_constants(double alpha, int d, int n) {
  check(alpha, n);
  if (d < 1) throw DimensionError("dimension must be positive");
  const double denom = 2.0 * n + alpha;
  return {std::min(2.0 * alpha / denom, 1.0), (alpha - d) / denom};
}

}  // namespace fnls
