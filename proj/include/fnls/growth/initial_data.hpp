#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fnls/spectral/field.hpp"

namespace fnls {

// Named families. Every family is band-limited to the cubic dealias cutoff
// and scaled so that the grid maximum of |u| equals amplitude.
//   single-bump    heat kernel coefficients e^{-heat_time |k|^2}, centred at pi
//   annulus        the sharpness wavepacket with frequencies in [N, 2N]
//   random-smooth  complex normal coefficients times (1 + |k|^2)^{-decay}, needs a seed
struct InitialDataSpec {
  std::string family = "single-bump";
  double amplitude = 1.0;
  std::optional<std::uint64_t> seed;
  double heat_time = 0.1;
  int packet_N = 4;
  double decay = 2.0;
};

SpectralField make_initial_data(const TorusGrid& grid, const InitialDataSpec& spec);

}  // namespace fnls
