#include "fnls/spectral/field.hpp"

#include <cmath>
#include <utility>

#include "fnls/error.hpp"

namespace fnls {

namespace {

void require_same_grid(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid())) throw DimensionError("fields live on different grids");
}

}  // namespace

SpectralField::SpectralField(const TorusGrid& grid)
    : grid_(grid), coeff_(Eigen::ArrayXcd::Zero(grid.size())) {}

SpectralField::SpectralField(const TorusGrid& grid, Eigen::ArrayXcd coeff)
    : grid_(grid), coeff_(std::move(coeff)) {
  if (coeff_.size() != grid_.size())
    throw DimensionError("coefficient count " + std::to_string(coeff_.size()) +
                         " does not match grid size " + std::to_string(grid_.size()));
}

SpectralField SpectralField::mode(const TorusGrid& grid, const std::array<int, 3>& k,
                                  std::complex<double> amplitude) {
  SpectralField f(grid);
  f.at(k) = amplitude;
  return f;
}

std::complex<double> SpectralField::at(const std::array<int, 3>& k) const {
  return coeff_(grid_.mode_index(k));
}

std::complex<double>& SpectralField::at(const std::array<int, 3>& k) {
  return coeff_(grid_.mode_index(k));
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(*this, other);
  coeff_ += other.coeff_;
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(*this, other);
  coeff_ -= other.coeff_;
  return *this;
}

SpectralField& SpectralField::operator*=(std::complex<double> c) {
  coeff_ *= c;
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(std::complex<double> c, SpectralField a) { return a *= c; }
SpectralField operator*(SpectralField a, std::complex<double> c) { return a *= c; }

SpectralField conjugate(const SpectralField& f) {
  const TorusGrid& g = f.grid();
  const int m = g.points();
  SpectralField out(g);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    auto j = g.split(i);
    for (int a = 0; a < g.dim(); ++a) j[a] = (m - j[a]) % m;
    out.coeff()(i) = std::conj(f.coeff()(g.flat(j)));
  }
  return out;
}

SpectralField translate(const SpectralField& f, const std::array<int, 3>& shift) {
  const TorusGrid& g = f.grid();
  Eigen::ArrayXd phase = Eigen::ArrayXd::Zero(g.size());
  for (int a = 0; a < g.dim(); ++a) phase += g.k_component(a) * (g.spacing() * shift[a]);
  Eigen::ArrayXcd c = f.coeff() * (std::complex<double>(0, -1) * phase.cast<std::complex<double>>()).exp();
  return SpectralField(g, std::move(c));
}

double max_abs_difference(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b);
  return (a.coeff() - b.coeff()).abs().maxCoeff();
}

}  // namespace fnls
