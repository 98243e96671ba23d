#include "fnls/spectral/multiplier.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <string>

#include "fnls/error.hpp"

namespace fnls {

namespace {

constexpr double kMeanTolerance = 1e-14;

void check_beta(const TorusGrid& g, const MultiIndex& beta) {
  if (static_cast<int>(beta.size()) != g.dim())
    throw DimensionError("multi-index length " + std::to_string(beta.size()) +
                         " does not match dimension " + std::to_string(g.dim()));
  for (int b : beta)
    if (b < 0) throw DomainError("multi-index entries must be non-negative");
}

// Negative-order symbols are undefined at k = 0; accept only mean-zero input.
void require_mean_zero(const SpectralField& f, const char* op) {
  const auto& c = f.coeff();
  const double scale = c.abs().maxCoeff();
  if (std::abs(c(0)) > kMeanTolerance * scale)
    throw SingularMultiplierError(std::string(op) + ": symbol is singular at k = 0 and the field has nonzero mean");
}

void zero_nyquist(const TorusGrid& g, const MultiIndex& beta, Eigen::ArrayXcd& c) {
  const double nyq = -g.points() / 2;
  for (int a = 0; a < g.dim(); ++a) {
    if (beta[a] % 2 == 0) continue;
    const auto& ka = g.k_component(a);
    for (Eigen::Index i = 0; i < c.size(); ++i)
      if (ka(i) == nyq) c(i) = 0.0;
  }
}

}  // namespace

Eigen::ArrayXd fractional_symbol(const TorusGrid& grid, double s) {
  Eigen::ArrayXd sym = grid.k_squared().pow(0.5 * s);
  sym(0) = s == 0.0 ? 1.0 : 0.0;
  return sym;
}

SpectralField apply_symbol(const SpectralField& f, const Eigen::ArrayXd& symbol) {
  if (symbol.size() != f.coeff().size()) throw DimensionError("symbol size mismatch");
  return SpectralField(f.grid(), f.coeff() * symbol.cast<std::complex<double>>());
}

SpectralField apply_fractional_power(const SpectralField& f, double s) {
  if (s < 0.0) require_mean_zero(f, "apply_fractional_power");
  return apply_symbol(f, fractional_symbol(f.grid(), s));
}

SpectralField apply_symbol_derivative(const SpectralField& f, double s, const MultiIndex& beta) {
  const TorusGrid& g = f.grid();
  check_beta(g, beta);
  const int order = std::accumulate(beta.begin(), beta.end(), 0);
  if (order > 2)
    throw UnsupportedOrderError("symbol derivatives are implemented up to order 2, got " +
                                std::to_string(order));
  if (order == 0) return apply_fractional_power(f, s);

  int ax1 = -1, ax2 = -1;
  for (int a = 0; a < g.dim(); ++a)
    for (int r = 0; r < beta[a]; ++r) (ax1 < 0 ? ax1 : ax2) = a;

  const Eigen::ArrayXd& ksq = g.k_squared();
  Eigen::ArrayXcd c(f.coeff().size());
  const std::complex<double> unit = order == 1 ? std::complex<double>(0, -1) : -1.0;
  for (Eigen::Index i = 1; i < c.size(); ++i) {
    const double r2 = ksq(i);
    const double ki = g.k_component(ax1)(i);
    double sym;
    if (order == 1) {
      sym = s * std::pow(r2, 0.5 * s - 1.0) * ki;
    } else {
      const double kj = g.k_component(ax2)(i);
      sym = s * (s - 2.0) * std::pow(r2, 0.5 * s - 2.0) * ki * kj;
      if (ax1 == ax2) sym += s * std::pow(r2, 0.5 * s - 1.0);
    }
    c(i) = unit * sym * f.coeff()(i);
  }

  // k = 0: the symbol vanishes there when s > |beta|, and |xi|^2 is a
  // polynomial with constant Hessian; anything else is singular.
  double sym0 = 0.0;
  if (s == 0.0 || s > order) {
    sym0 = 0.0;
  } else if (s == 2.0 && order == 2) {
    sym0 = ax1 == ax2 ? 2.0 : 0.0;
  } else {
    require_mean_zero(f, "apply_symbol_derivative");
  }
  c(0) = unit * sym0 * f.coeff()(0);

  zero_nyquist(g, beta, c);
  return SpectralField(g, std::move(c));
}

SpectralField apply_derivative(const SpectralField& f, const MultiIndex& beta) {
  const TorusGrid& g = f.grid();
  check_beta(g, beta);
  Eigen::ArrayXcd c = f.coeff();
  for (int a = 0; a < g.dim(); ++a) {
    if (beta[a] == 0) continue;
    const Eigen::ArrayXcd ik = std::complex<double>(0, 1) * g.k_component(a).cast<std::complex<double>>();
    for (int r = 0; r < beta[a]; ++r) c *= ik;
  }
  zero_nyquist(g, beta, c);
  return SpectralField(g, std::move(c));
}

std::vector<MultiIndex> multi_indices(int dim, int order) {
  std::vector<MultiIndex> out;
  MultiIndex cur(dim, 0);
  auto rec = [&](auto&& self, int axis, int left) -> void {
    if (axis == dim - 1) {
      cur[axis] = left;
      out.push_back(cur);
      return;
    }
    for (int b = left; b >= 0; --b) {
      cur[axis] = b;
      self(self, axis + 1, left - b);
    }
  };
  if (dim >= 1 && order >= 0) rec(rec, 0, order);
  return out;
}

}  // namespace fnls
