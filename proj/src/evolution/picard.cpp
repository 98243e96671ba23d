#include "fnls/evolution/picard.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "fnls/error.hpp"
#include "fnls/evolution/propagate.hpp"
#include "fnls/spectral/multiplier.hpp"
#include "fnls/spectral/transform.hpp"

namespace fnls {

namespace {

using Path = std::vector<Eigen::ArrayXcd>;
constexpr std::complex<double> kI{0.0, 1.0};

struct Level {
  Path path;
  int iterations = 0;
  std::vector<double> gaps;
  double ratio = 0.0;
};

class DuhamelMap {
 public:
  DuhamelMap(const SpectralField& u0, double T, const EquationParams& p, int intervals)
      : grid_(u0.grid()), p_(p), u0_(u0.coeff()), J_(intervals), h_(T / intervals) {
    symbol_ = fractional_symbol(grid_, p.alpha());
    step_.resize(symbol_.size());
    for (Eigen::Index i = 0; i < symbol_.size(); ++i) step_(i) = std::polar(1.0, -symbol_(i) * h_);
    mask_ = dealias_mask(grid_, p.sigma());
  }

  Eigen::ArrayXcd linear(int j) const {
    Eigen::ArrayXcd out(u0_.size());
    const double t = j * h_;
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = u0_(i) * std::polar(1.0, -symbol_(i) * t);
    return out;
  }

  Eigen::ArrayXcd nonlinear(const Eigen::ArrayXcd& c) const {
    Eigen::ArrayXcd s = synthesize(SpectralField(grid_, c));
    const Eigen::ArrayXd a2 = s.abs2();
    s *= (p_.sigma() == 1 ? a2 : a2.pow(p_.sigma())).cast<std::complex<double>>();
    return double(p_.sign()) * analyze(s, grid_).coeff() * mask_;
  }

  // One application; returns sup_j ||out_j - in_j||_{L^2}.
  double apply(const Path& in, Path& out) const {
    out.resize(J_ + 1);
    Eigen::ArrayXcd g_prev = nonlinear(in[0]);
    Eigen::ArrayXcd duhamel = Eigen::ArrayXcd::Zero(u0_.size());
    out[0] = u0_;
    double gap = std::sqrt(grid_.volume() * (out[0] - in[0]).abs2().sum());
    for (int j = 1; j <= J_; ++j) {
      const Eigen::ArrayXcd g = nonlinear(in[j]);
      duhamel = step_ * (duhamel + 0.5 * h_ * g_prev) + 0.5 * h_ * g;
      out[j] = linear(j) - kI * duhamel;
      gap = std::max(gap, std::sqrt(grid_.volume() * (out[j] - in[j]).abs2().sum()));
      g_prev = g;
    }
    return gap;
  }

 private:
  TorusGrid grid_;
  EquationParams p_;
  Eigen::ArrayXcd u0_;
  int J_;
  double h_;
  Eigen::ArrayXd symbol_;
  Eigen::ArrayXcd step_;
  Eigen::ArrayXd mask_;
};

Level iterate(const DuhamelMap& map, Path guess, int max_iters, double tol) {
  Level lv;
  Path next;
  int rising = 0;
  for (int k = 1; k <= max_iters; ++k) {
    const double gap = map.apply(guess, next);
    std::swap(guess, next);
    lv.gaps.push_back(gap);
    lv.iterations = k;
    if (k >= 2) {
      const double prev = lv.gaps[k - 2];
      if (prev > 0.0) lv.ratio = std::max(lv.ratio, gap / prev);
      rising = gap >= prev ? rising + 1 : 0;
    }
    if (gap < tol) {
      lv.path = std::move(guess);
      return lv;
    }
    if (rising >= 2) throw DivergenceError("picard_solve: iterate gap stopped decreasing", lv.gaps);
  }
  throw DivergenceError("picard_solve: no convergence within " + std::to_string(max_iters) + " iterations",
                        lv.gaps);
}

}  // namespace

PicardResult picard_solve(const SpectralField& u0, double T, const EquationParams& params,
                          const PicardOptions& opt) {
  if (!(T > 0.0)) throw DomainError("picard_solve: T must be positive");
  if (u0.grid().dim() != params.d()) throw DimensionError("picard_solve: grid and equation dimension differ");
  if (opt.max_iters < 1 || !(opt.tol > 0.0)) throw DomainError("picard_solve: need max_iters >= 1 and tol > 0");
  if (opt.initial_intervals < 1 || opt.max_intervals < opt.initial_intervals)
    throw DomainError("picard_solve: bad interval bounds");

  int J = opt.initial_intervals;
  Path guess;
  {
    const DuhamelMap map(u0, T, params, J);
    for (int j = 0; j <= J; ++j) guess.push_back(map.linear(j));
  }
  Level coarse = iterate(DuhamelMap(u0, T, params, J), std::move(guess), opt.max_iters, opt.tol);
  const std::vector<double> first_gaps = coarse.gaps;
  double ratio = coarse.ratio;

  double shift = 0.0;
  while (true) {
    if (2 * J > opt.max_intervals)
      throw ToleranceError("picard_solve: time grid did not settle within " + std::to_string(opt.max_intervals) +
                               " intervals",
                           shift);
    Path seed(2 * J + 1);
    for (int j = 0; j <= J; ++j) seed[2 * j] = coarse.path[j];
    for (int j = 0; j < J; ++j) seed[2 * j + 1] = 0.5 * (coarse.path[j] + coarse.path[j + 1]);
    Level fine = iterate(DuhamelMap(u0, T, params, 2 * J), std::move(seed), opt.max_iters, opt.tol);

    shift = 0.0;
    for (int j = 0; j <= J; ++j)
      shift = std::max(shift, std::sqrt(u0.grid().volume() * (fine.path[2 * j] - coarse.path[j]).abs2().sum()));
    J *= 2;
    ratio = std::max(ratio, fine.ratio);
    coarse = std::move(fine);
    if (shift < 0.1 * opt.tol) break;
  }

  PicardResult r;
  r.intervals = J;
  r.iterations = coarse.iterations;
  r.gaps = first_gaps;
  r.contraction_ratio = ratio;
  r.refinement_shift = shift;
  for (int j = 0; j <= J; ++j) {
    r.times.push_back(T * j / J);
    r.trajectory.emplace_back(u0.grid(), std::move(coarse.path[j]));
  }
  return r;
}

PicardResult picard_solve(const SpectralField& u0, double T, const EquationParams& params, int max_iters,
                          double tol) {
  PicardOptions opt;
  opt.max_iters = max_iters;
  opt.tol = tol;
  return picard_solve(u0, T, params, opt);
}

}  // namespace fnls
