#include "fnls/kernel/kernel.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <unordered_map>

#include "fnls/error.hpp"
#include "fnls/spectral/field.hpp"
#include "fnls/spectral/littlewood_paley.hpp"
#include "fnls/spectral/transform.hpp"

namespace fnls {

namespace {

void check_dyadic(int N, const char* where) {
  if (N < 1 || !std::has_single_bit(static_cast<unsigned>(N)))
    throw DomainError(std::string(where) + ": N must be a power of two, got " + std::to_string(N));
}

void check_alpha(double alpha, const char* where) {
  if (!(alpha > 0.0)) throw DomainError(std::string(where) + ": alpha must be positive");
  if (alpha == 1.0) throw HalfWaveExcludedError(where);
}

}  // namespace

Eigen::ArrayXcd kernel_eval(int N, double alpha, double t, const TorusGrid& grid) {
  check_dyadic(N, "kernel_eval");
  check_alpha(alpha, "kernel_eval");
  if (grid.points() / 2 < 2 * N)
    throw ResolutionError("kernel_eval: m=" + std::to_string(grid.points()) + " does not resolve 2N=" +
                          std::to_string(2 * N));
  if (!std::isfinite(t)) throw DomainError("kernel_eval: t must be finite");

  const Eigen::ArrayXd& ksq = grid.k_squared();
  std::unordered_map<double, std::complex<double>> memo;
  SpectralField f(grid);
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    if (ksq(i) >= 4.0 * N * N || 4.0 * ksq(i) <= double(N) * N) continue;
    auto [it, fresh] = memo.try_emplace(ksq(i));
    if (fresh) {
      const double r = std::sqrt(ksq(i));
      it->second = lp_bump(r / N) * std::polar(1.0, -std::pow(r, alpha) * t);
    }
    f.coeff()(i) = it->second;
  }
  return synthesize(f);
}

DecayEnvelope::DecayEnvelope(int N, double alpha, int d) : N_(N), alpha_(alpha), d_(d) {
  check_dyadic(N, "decay_envelope");
  check_alpha(alpha, "decay_envelope");
  if (d < 1) throw DomainError("decay_envelope: dimension must be >= 1");
  flat_end_ = std::pow(double(N), -alpha);
  rising_start_ = alpha > 1.0 ? std::pow(double(N), 1.0 - alpha) : std::numeric_limits<double>::infinity();
}

double DecayEnvelope::operator()(double t) const {
  const double a = std::abs(t);
  if (!(a <= 1.0)) throw DomainError("decay_envelope: |t| must be <= 1");
  const double n = N_;
  if (a <= flat_end_) return std::pow(n, d_);
  if (a > rising_start_) return std::pow(n, d_ * alpha_ / 2.0) * std::pow(a, d_ / 2.0);
  return std::pow(n, d_ - d_ * alpha_ / 2.0) * std::pow(a, -d_ / 2.0);
}

double decay_envelope(int N, double alpha, int d, double t) { return DecayEnvelope(N, alpha, d)(t); }

int kernel_grid_points(int N, int oversample) {
  if (oversample < 2) throw DomainError("kernel_grid_points: oversample must be >= 2");
  return static_cast<int>(std::bit_ceil(static_cast<unsigned>(2 * N * oversample)));
}

}  // namespace fnls
