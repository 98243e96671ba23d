#include "fnls/growth/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fnls/error.hpp"
#include "fnls/evolution/evolve.hpp"

namespace fnls {

namespace {

void add_unique(std::vector<double>& v, double s) {
  if (std::none_of(v.begin(), v.end(), [&](double x) { return x == s; })) v.push_back(s);
}

nlohmann::json fit_json(const ExponentFit& f) {
  return {{"exponent", f.exponent}, {"intercept", f.intercept}, {"residual", f.residual}, {"samples", f.samples}};
}

}  // namespace

void validate(const GrowthExperimentConfig& c) {
  if (!(c.T > 0.0) || !(c.dt > 0.0) || c.dt > c.T) throw DomainError("growth: need 0 < dt <= T");
  if (c.T / c.dt > 1e8) throw DomainError("growth: T/dt exceeds the 1e8 step budget");
  if (c.n < 0) throw DomainError("growth: n must be >= 0");
  if (c.sample_every < 1) throw DomainError("growth: sample_every must be >= 1");
  TorusGrid(c.params.d(), c.m);
}

GrowthResult growth_experiment(const GrowthExperimentConfig& c) {
  validate(c);
  const TorusGrid grid(c.params.d(), c.m);
  const double alpha = c.params.alpha();
  const double s_top = alpha + c.n;
  const double s_energy = 0.5 * alpha;

  DiagnosticsPlan plan;
  plan.sobolev = c.sobolev;
  add_unique(plan.sobolev, s_top);
  add_unique(plan.sobolev, s_energy);
  plan.sup_fractional = c.sup_fractional;
  plan.modified_energy = c.modified_energy;

  const SpectralField u0 = make_initial_data(grid, c.u0);
  GrowthResult r{evolve(u0, c.T, c.dt, c.params, c.sample_every, plan), s_top, {}, {}, {}, 0.0};
  const auto& t = r.record.times();
  for (double s : plan.sobolev)
    r.exponents.push_back({s, fit_growth_exponent(t, r.record.column(sobolev_column(s)), c.burn_in)});
  r.tracked = r.exponents[std::find(plan.sobolev.begin(), plan.sobolev.end(), s_top) - plan.sobolev.begin()].fit;
  if (alpha > c.params.d()) r.bound = growth_bound(alpha, c.params.d(), c.n);
  r.energy_norm_drift = r.record.relative_drift(sobolev_column(s_energy));
  return r;
}

nlohmann::json GrowthResult::summary() const {
  nlohmann::json norms = nlohmann::json::array();
  for (const auto& e : exponents) norms.push_back({{"s", e.s}, {"fit", fit_json(e.fit)}});
  nlohmann::json j{{"params", record.params().to_json()},
                   {"m", record.points()},
                   {"dt", record.dt()},
                   {"T", record.requested_time()},
                   {"s_tracked", s_tracked},
                   {"tracked", fit_json(tracked)},
                   {"norms", norms},
                   {"energy_norm_drift", energy_norm_drift},
                   {"mass_drift", record.relative_drift("mass")},
                   {"energy_drift", record.relative_drift("energy")}};
  j["bound"] = bound ? nlohmann::json(*bound) : nlohmann::json(nullptr);
  return j;
}

}  // namespace fnls
