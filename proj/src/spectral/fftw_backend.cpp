#include "fftw_backend.hpp"

#include <array>
#include <map>
#include <mutex>
#include <tuple>

#include <fftw3.h>

namespace fnls::detail {

namespace {

// FFTW planning is not thread safe, execution with new arrays is.
// FFTW_ESTIMATE keeps the chosen algorithm, and so the bits, deterministic.
fftw_plan plan_for(int dim, int m, int sign) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, fftw_plan> plans;
  std::lock_guard lock(mutex);
  auto& p = plans[{dim, m, sign}];
  if (!p) {
    std::array<int, 3> n{m, m, m};
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(m);
    auto* a = fftw_alloc_complex(total);
    auto* b = fftw_alloc_complex(total);
    p = fftw_plan_dft(dim, n.data(), a, b, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(a);
    fftw_free(b);
  }
  return p;
}

}  // namespace

void dft(const std::complex<double>* in, std::complex<double>* out, int dim, int m, int sign) {
  fftw_plan p = plan_for(dim, m, sign);
  // FFTW never writes to the input of an out-of-place complex transform.
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace fnls::detail
