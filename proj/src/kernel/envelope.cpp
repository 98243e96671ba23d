#include "fnls/kernel/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fnls/error.hpp"
#include "fnls/kernel/kernel.hpp"
#include "fnls/util/line_fit.hpp"

namespace fnls {

namespace {

EnvelopeReport certify(const std::vector<int>& Ns, double alpha, int d,
                       const std::function<std::vector<double>(int)>& times_for) {
  if (Ns.empty()) throw DomainError("envelope_certificate: empty N list");
  EnvelopeReport rep;
  rep.alpha = alpha;
  rep.d = d;
  for (int N : Ns) {
    const DecayEnvelope omega(N, alpha, d);
    const TorusGrid grid(d, kernel_grid_points(N));
    double worst = 0.0;
    for (double t : times_for(N)) {
      if (!(t > 0.0 && t <= 1.0)) throw DomainError("envelope_certificate: times must lie in (0, 1]");
      const double sup = kernel_eval(N, alpha, t, grid).abs().maxCoeff();
      const double w = omega(t);
      rep.samples.push_back({N, t, sup, w, sup / w});
      worst = std::max(worst, sup / w);
    }
    rep.Ns.push_back(N);
    rep.max_ratio.push_back(worst);
  }
  if (rep.Ns.size() >= 2) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < rep.Ns.size(); ++i) {
      x.push_back(std::log(double(rep.Ns[i])));
      y.push_back(std::log(rep.max_ratio[i]));
    }
    const LineFit fit = fit_line(x, y);
    rep.slope = fit.slope;
    rep.residual = fit.residual;
  }
  return rep;
}

}  // namespace

std::vector<double> LogTimeGrid::instants(int N, double alpha) const {
  if (points < 2 || !(lower_factor > 0.0)) throw DomainError("LogTimeGrid: need points >= 2 and lower_factor > 0");
  const double lo = std::log(lower_factor * std::pow(double(N), -alpha));
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) t[i] = std::exp(lo * (1.0 - double(i + 1) / points));
  t.back() = 1.0;
  return t;
}

EnvelopeReport envelope_certificate(const std::vector<int>& Ns, double alpha, int d,
                                    const std::vector<double>& t_grid) {
  return certify(Ns, alpha, d, [&](int) { return t_grid; });
}

EnvelopeReport envelope_certificate(const std::vector<int>& Ns, double alpha, int d,
                                    const LogTimeGrid& t_grid) {
  return certify(Ns, alpha, d, [&](int N) { return t_grid.instants(N, alpha); });
}

CsvTable envelope_table(const EnvelopeReport& report) {
  CsvTable t({"N", "t", "sup_kappa", "omega", "ratio"});
  for (const auto& s : report.samples) t.add_row({double(s.N), s.t, s.sup_kappa, s.omega, s.ratio});
  return t;
}

nlohmann::json envelope_summary(const EnvelopeReport& report) {
  nlohmann::json per_n = nlohmann::json::array();
  for (std::size_t i = 0; i < report.Ns.size(); ++i)
    per_n.push_back({{"N", report.Ns[i]}, {"max_ratio", report.max_ratio[i]}});
  return {{"alpha", report.alpha},
          {"d", report.d},
          {"max_ratio", per_n},
          {"slope", report.slope},
          {"residual", report.residual}};
}

}  // namespace fnls
