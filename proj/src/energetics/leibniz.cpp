#include "fnls/energetics/leibniz.hpp"

#include <string>

#include "fnls/error.hpp"
#include "fnls/spectral/multiplier.hpp"
#include "padded.hpp"

namespace fnls {

namespace {

using Samples = Eigen::ArrayXcd;

SpectralField product(const Samples& a, const Samples& b, const TorusGrid& g) { return analyze(a * b, g); }

}  // namespace

SpectralField commutator(const SpectralField& u, double alpha) {
  const auto p = detail::padded(u, 2);
  const Samples du = synthesize(apply_fractional_power(p.field, alpha));
  const Eigen::ArrayXd cross = 2.0 * (p.samples.conjugate() * du).real();
  SpectralField out = analyze(cross.cast<std::complex<double>>(), p.grid);
  out -= apply_fractional_power(analyze(p.samples.abs2().cast<std::complex<double>>(), p.grid), alpha);
  return out;
}

SpectralField leibniz_defect(const SpectralField& f, const SpectralField& g, double s, int order) {
  if (!(f.grid() == g.grid())) throw DimensionError("leibniz_defect: fields live on different grids");
  if (order != 1 && order != 2) throw UnsupportedOrderError("leibniz_defect: order must be 1 or 2");
  if (order == 2 && !(s >= 2.0))
    throw DomainError("leibniz_defect: order 2 needs s >= 2, got s = " + std::to_string(s));
  if (!(s >= 0.0)) throw DomainError("leibniz_defect: s must be >= 0");

  const auto pf = detail::padded(f, 2);
  const auto pg = detail::padded(g, 2);
  const TorusGrid& grid = pf.grid;
  const Samples dsf = synthesize(apply_fractional_power(pf.field, s));
  const Samples dsg = synthesize(apply_fractional_power(pg.field, s));

  SpectralField out = apply_fractional_power(product(pf.samples, pg.samples, grid), s);
  out -= product(pf.samples, dsg, grid);
  out -= product(pg.samples, dsf, grid);
  if (order == 2) {
    Samples dot = Samples::Zero(grid.size());
    for (int a = 0; a < grid.dim(); ++a) {
      MultiIndex e(grid.dim(), 0);
      e[a] = 1;
      dot += synthesize(apply_derivative(pf.field, e)) * synthesize(apply_derivative(pg.field, e));
    }
    out += s * apply_fractional_power(analyze(dot, grid), s - 2.0);
  }
  return out;
}

CsvTable coefficient_table(const SpectralField& f) {
  const TorusGrid& g = f.grid();
  std::vector<std::string> header;
  for (int a = 0; a < g.dim(); ++a) header.push_back("k" + std::to_string(a));
  header.push_back("re");
  header.push_back("im");
  CsvTable t(header);
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const auto c = f.coeff()(i);
    if (c == 0.0) continue;
    const auto k = g.mode(i);
    std::vector<double> row;
    for (int a = 0; a < g.dim(); ++a) row.push_back(k[a]);
    row.push_back(c.real());
    row.push_back(c.imag());
    t.add_row(std::move(row));
  }
  return t;
}

}  // namespace fnls
