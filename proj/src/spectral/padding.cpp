#include "fnls/spectral/padding.hpp"

#include <bit>
#include <string>

#include "fnls/error.hpp"

namespace fnls {

int product_padding(int sigma) {
  if (sigma < 1) throw DomainError("sigma must be a positive integer");
  return static_cast<int>(std::bit_ceil(static_cast<unsigned>(sigma + 1)));
}

SpectralField zero_pad(const SpectralField& f, int factor) {
  if (factor < 1 || !std::has_single_bit(static_cast<unsigned>(factor)))
    throw DomainError("padding factor must be a power of two, got " + std::to_string(factor));
  const TorusGrid& g = f.grid();
  if (factor == 1) return f;
  TorusGrid big(g.dim(), g.points() * factor);
  SpectralField out(big);
  for (Eigen::Index i = 0; i < g.size(); ++i) out.coeff()(big.mode_index(g.mode(i))) = f.coeff()(i);
  return out;
}

SpectralField truncate(const SpectralField& f, const TorusGrid& target) {
  const TorusGrid& g = f.grid();
  if (g.dim() != target.dim() || g.points() % target.points() != 0)
    throw DimensionError("cannot truncate m=" + std::to_string(g.points()) + " onto m=" +
                         std::to_string(target.points()));
  SpectralField out(target);
  for (Eigen::Index i = 0; i < target.size(); ++i)
    out.coeff()(i) = f.coeff()(g.mode_index(target.mode(i)));
  return out;
}

}  // namespace fnls
