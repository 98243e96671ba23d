#include "fnls/kernel/strichartz.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <string>

#include "fnls/error.hpp"
#include "fnls/kernel/exponents.hpp"
#include "fnls/kernel/kernel.hpp"
#include "fnls/spectral/norms.hpp"
#include "fnls/spectral/transform.hpp"
#include "fnls/util/line_fit.hpp"

namespace fnls {

namespace {

// Sup norm of the linear flow at given times; only the support of f is rotated.
class FlowSampler {
 public:
  FlowSampler(const SpectralField& f, double alpha) : f_(f) {
    const Eigen::ArrayXd& ksq = f.grid().k_squared();
    for (Eigen::Index i = 0; i < f.coeff().size(); ++i) {
      if (f.coeff()(i) == 0.0) continue;
      idx_.push_back(i);
      freq_.push_back(std::pow(ksq(i), 0.5 * alpha));
    }
  }

  double sup_at(double t) const {
    SpectralField g(f_.grid());
    for (std::size_t j = 0; j < idx_.size(); ++j)
      g.coeff()(idx_[j]) = f_.coeff()(idx_[j]) * std::polar(1.0, -freq_[j] * t);
    return synthesize(g).abs().maxCoeff();
  }

 private:
  const SpectralField& f_;
  std::vector<Eigen::Index> idx_;
  std::vector<double> freq_;
};

double time_norm(const std::vector<double>& sups, double p) {
  const int n = static_cast<int>(sups.size()) - 1;
  if (std::isinf(p)) {
    double m = 0.0;
    for (double s : sups) m = std::max(m, s);
    return m;
  }
  const double q = 2.0 * p;
  double acc = 0.5 * (std::pow(sups.front(), q) + std::pow(sups.back(), q));
  for (int i = 1; i < n; ++i) acc += std::pow(sups[i], q);
  return std::pow(acc / n, 1.0 / q);
}

void check_p(double p) {
  if (!(p >= 1.0)) throw DomainError("strichartz: p must be >= 1");
}

}  // namespace

SpectralField sharpness_wavepacket(int N, const TorusGrid& grid) {
  if (N < 1 || !std::has_single_bit(static_cast<unsigned>(N)))
    throw DomainError("sharpness_wavepacket: N must be a power of two");
  if (grid.points() / 2 <= 2 * N)
    throw ResolutionError("sharpness_wavepacket: m=" + std::to_string(grid.points()) +
                          " does not resolve |k| = 2N = " + std::to_string(2 * N));
  const Eigen::ArrayXd& ksq = grid.k_squared();
  const double lo = double(N) * N, hi = 4.0 * N * N;
  Eigen::ArrayXcd c = ((ksq >= lo) && (ksq <= hi)).cast<double>().cast<std::complex<double>>();
  return SpectralField(grid, std::move(c));
}

double strichartz_quotient(const SpectralField& f, double alpha, double p, int intervals) {
  check_p(p);
  if (intervals < 1) throw DomainError("strichartz_quotient: need at least one interval");
  const double l2 = std::sqrt(squared_l2(f));
  if (l2 == 0.0) throw DomainError("strichartz_quotient: zero data");
  const FlowSampler flow(f, alpha);
  std::vector<double> sups(intervals + 1);
  for (int i = 0; i <= intervals; ++i) sups[i] = flow.sup_at(double(i) / intervals);
  return time_norm(sups, p) / l2;
}

StrichartzValue strichartz_quotient_refined(const SpectralField& f, double alpha, double p,
                                            const StrichartzOptions& opt) {
  check_p(p);
  if (opt.initial_intervals < 1 || opt.max_intervals < opt.initial_intervals)
    throw DomainError("strichartz: bad refinement limits");
  const double l2 = std::sqrt(squared_l2(f));
  if (l2 == 0.0) throw DomainError("strichartz_quotient: zero data");
  const FlowSampler flow(f, alpha);
  int n = opt.initial_intervals;
  std::vector<double> sups(n + 1);
  for (int i = 0; i <= n; ++i) sups[i] = flow.sup_at(double(i) / n);
  double q = time_norm(sups, p) / l2;
  double change = 1.0;
  while (2 * n <= opt.max_intervals) {
    std::vector<double> finer(2 * n + 1);
    for (int i = 0; i <= n; ++i) finer[2 * i] = sups[i];
    for (int i = 0; i < n; ++i) finer[2 * i + 1] = flow.sup_at(double(2 * i + 1) / (2 * n));
    sups = std::move(finer);
    n *= 2;
    const double next = time_norm(sups, p) / l2;
    change = std::abs(next - q) / q;
    q = next;
    if (change < opt.rel_change) return {q, l2, n};
  }
  throw ToleranceError("strichartz_quotient: time refinement did not settle", change);
}

StrichartzScaling strichartz_scaling(double alpha, double p, int d, const std::vector<int>& Ns,
                                     const StrichartzOptions& opt) {
  if (Ns.size() < 4) throw SpanError("strichartz_scaling: need at least four N values");
  StrichartzScaling s;
  s.alpha = alpha;
  s.p = p;
  s.d = d;
  s.predicted = wavepacket_scaling_exponent(alpha, p, d);
  std::vector<double> x, y;
  for (int N : Ns) {
    const TorusGrid grid(d, kernel_grid_points(N));
    const StrichartzValue v = strichartz_quotient_refined(sharpness_wavepacket(N, grid), alpha, p, opt);
    s.Ns.push_back(N);
    s.values.push_back(v);
    x.push_back(std::log(double(N)));
    y.push_back(std::log(v.quotient));
  }
  const LineFit fit = fit_line(x, y);
  s.slope = fit.slope;
  s.residual = fit.residual;
  return s;
}

CsvTable strichartz_table(const StrichartzScaling& s) {
  CsvTable t({"N", "quotient", "l2", "intervals"});
  for (std::size_t i = 0; i < s.Ns.size(); ++i)
    t.add_row({double(s.Ns[i]), s.values[i].quotient, s.values[i].l2, double(s.values[i].intervals)});
  return t;
}

nlohmann::json strichartz_summary(const StrichartzScaling& s) {
  return {{"alpha", s.alpha}, {"p", s.p},          {"d", s.d},
          {"slope", s.slope}, {"residual", s.residual}, {"predicted", s.predicted}};
}

}  // namespace fnls
