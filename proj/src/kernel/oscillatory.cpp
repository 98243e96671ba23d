#include "fnls/kernel/oscillatory.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fnls/error.hpp"
#include "fnls/spectral/littlewood_paley.hpp"

namespace fnls {

namespace {

using boost::math::quadrature::gauss_kronrod;
using cplx = std::complex<double>;

constexpr unsigned kMaxDepth = 15;

template <class F>
cplx integrate(F f, double a, double b, double tol, double& err_sum) {
  double err = 0.0;
  const cplx v = gauss_kronrod<double, 31>::integrate(f, a, b, kMaxDepth, tol, &err);
  err_sum += err;
  return v;
}

// Smooth pieces of psi(|xi|) on the line.
constexpr double kBreaks[] = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};

}  // namespace

cplx oscillatory_block(const std::vector<int>& n, int N, double alpha, const std::vector<double>& x,
                       double t, double abs_tol) {
  const int d = static_cast<int>(n.size());
  if (d < 1 || d > 2 || x.size() != n.size())
    throw DimensionError("oscillatory_block: lattice vector and point must both have length 1 or 2");
  if (N < 1) throw DomainError("oscillatory_block: N must be positive");
  if (!(alpha > 0.0)) throw DomainError("oscillatory_block: alpha must be positive");
  if (alpha == 1.0) throw HalfWaveExcludedError("oscillatory_block");
  const double scale = std::pow(double(N), d);
  if (abs_tol < 0.0) abs_tol = 1e-8 * scale;
  const double tol = abs_tol / scale;
  const double na = std::pow(double(N), alpha) * t;
  std::vector<double> c(d);
  for (int a = 0; a < d; ++a) c[a] = N * (x[a] - 2.0 * std::numbers::pi * n[a]);

  double err = 0.0;
  cplx total = 0.0;
  if (d == 1) {
    auto f = [&](double xi) {
      const double r = std::abs(xi);
      return lp_bump(r) * std::polar(1.0, c[0] * xi - na * std::pow(r, alpha));
    };
    for (int i = 0; i + 1 < 6; ++i) {
      if (kBreaks[i] == -0.5) continue;
      total += integrate(f, kBreaks[i], kBreaks[i + 1], tol / 8.0, err);
    }
  } else {
    double inner_err = 0.0;
    auto row = [&](double xi1) {
      auto f = [&](double xi2) {
        const double r = std::hypot(xi1, xi2);
        if (r <= 0.5 || r >= 2.0) return cplx(0.0);
        return lp_bump(r) * std::polar(1.0, c[0] * xi1 + c[1] * xi2 - na * std::pow(r, alpha));
      };
      const double reach = std::sqrt(std::max(0.0, 4.0 - xi1 * xi1));
      double e = 0.0;
      const cplx v = integrate(f, -reach, reach, tol / 32.0, e);
      inner_err = std::max(inner_err, e);
      return v;
    };
    for (int i = 0; i + 1 < 6; ++i) total += integrate(row, kBreaks[i], kBreaks[i + 1], tol / 8.0, err);
    err += 4.0 * inner_err;
  }
  const double achieved = err * scale;
  if (!(achieved <= abs_tol) || !std::isfinite(total.real()) || !std::isfinite(total.imag()))
    throw ToleranceError("oscillatory_block: quadrature error " + std::to_string(achieved) +
                             " exceeds tolerance " + std::to_string(abs_tol),
                         achieved);
  return scale * total;
}

VanDerCorputResult van_der_corput_check(const Phase& phase, int k, double lambda, double a, double b,
                                        const Weight& psi) {
  if (k < 1) throw DomainError("van_der_corput_check: k must be >= 1");
  if (!(lambda > 0.0)) throw DomainError("van_der_corput_check: lambda must be positive");
  if (!(b > a)) throw DomainError("van_der_corput_check: need a < b");

  constexpr int kSamples = 1001;
  double prev = 0.0;
  int trend = 0;
  for (int i = 0; i < kSamples; ++i) {
    const double s = a + (b - a) * i / (kSamples - 1);
    const double dk = phase.derivative(s);
    if (!(dk >= 1.0 - 1e-12))
      throw PreconditionError("van_der_corput_check: derivative of order " + std::to_string(k) +
                              " is " + std::to_string(dk) + " < 1 at t = " + std::to_string(s));
    if (k == 1 && i > 0) {
      const int step = dk > prev ? 1 : (dk < prev ? -1 : 0);
      if (step != 0 && trend != 0 && step != trend)
        throw PreconditionError("van_der_corput_check: u' is not monotone on [a, b]");
      if (step != 0) trend = step;
    }
    prev = dk;
  }

  double err = 0.0;
  auto f = [&](double s) { return psi.value(s) * std::polar(1.0, lambda * phase.value(s)); };
  const cplx integral = gauss_kronrod<double, 61>::integrate(f, a, b, kMaxDepth, 1e-10, &err);
  auto g = [&](double s) { return std::abs(psi.derivative(s)); };
  const double variation = gauss_kronrod<double, 61>::integrate(g, a, b, kMaxDepth, 1e-10);

  VanDerCorputResult r;
  r.lhs = std::abs(integral);
  const double c = k == 1 ? 3.0 : 12.0 * k;
  r.bound = c * std::pow(lambda, -1.0 / k) * (std::abs(psi.value(b)) + variation);
  r.pass = r.lhs <= r.bound;
  return r;
}

}  // namespace fnls
