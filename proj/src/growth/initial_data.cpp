#include "fnls/growth/initial_data.hpp"

#include <cmath>
#include <string>

#include "fnls/error.hpp"
#include "fnls/evolution/propagate.hpp"
#include "fnls/kernel/strichartz.hpp"
#include "fnls/spectral/transform.hpp"
#include "fnls/util/counter_rng.hpp"

namespace fnls {

namespace {

// Counter keyed by the mode, so a seed gives the same low modes on every grid.
std::uint64_t mode_counter(const std::array<int, 3>& k) {
  std::uint64_t c = 0;
  for (int a = 0; a < 3; ++a) c = (c << 21) | static_cast<std::uint64_t>(k[a] + (1 << 20));
  return c;
}

SpectralField scaled(SpectralField f, double amplitude) {
  const double peak = synthesize(f).abs().maxCoeff();
  if (!(peak > 0.0)) throw DomainError("initial data vanishes on the grid");
  f *= amplitude / peak;
  return f;
}

}  // namespace

SpectralField make_initial_data(const TorusGrid& grid, const InitialDataSpec& spec) {
  if (!(spec.amplitude > 0.0)) throw DomainError("initial data amplitude must be positive");
  const int K = dealias_cutoff(grid.points(), 1);
  SpectralField f(grid);
  auto inside = [&](const std::array<int, 3>& k) {
    for (int a = 0; a < grid.dim(); ++a)
      if (std::abs(k[a]) > K) return false;
    return true;
  };

  if (spec.family == "single-bump") {
    if (!(spec.heat_time > 0.0)) throw DomainError("single-bump heat_time must be positive");
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const auto k = grid.mode(i);
      if (!inside(k)) continue;
      int parity = 0;
      for (int a = 0; a < grid.dim(); ++a) parity += k[a];
      f.coeff()(i) = (parity % 2 == 0 ? 1.0 : -1.0) * std::exp(-spec.heat_time * grid.k_squared()(i));
    }
  } else if (spec.family == "annulus") {
    if (2 * spec.packet_N > K)
      throw ResolutionError("annulus with N = " + std::to_string(spec.packet_N) + " exceeds the dealias cutoff");
    f = sharpness_wavepacket(spec.packet_N, grid);
  } else if (spec.family == "random-smooth") {
    if (!spec.seed) throw PreconditionError("random-smooth initial data needs a seed");
    if (!(spec.decay > 0.0)) throw DomainError("random-smooth decay must be positive");
    const CounterRng rng(*spec.seed);
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const auto k = grid.mode(i);
      if (!inside(k)) continue;
      const std::uint64_t c = 2 * mode_counter(k);
      const std::complex<double> z(rng.normal(c), rng.normal(c + 1));
      f.coeff()(i) = z * std::pow(1.0 + grid.k_squared()(i), -spec.decay) / std::sqrt(2.0);
    }
  } else {
    throw SpecError("unknown initial data family '" + spec.family + "'");
  }
  return scaled(std::move(f), spec.amplitude);
}

}  // namespace fnls
