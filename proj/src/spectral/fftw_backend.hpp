#pragma once

#include <complex>

namespace fnls::detail {

// Unnormalized out-of-place DFT on an m^dim row-major array.
// sign = -1 forward, +1 backward. Safe to call concurrently.
void dft(const std::complex<double>* in, std::complex<double>* out, int dim, int m, int sign);

}  // namespace fnls::detail
