#include "fnls/growth/gronwall.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "fnls/error.hpp"

namespace fnls {

namespace {

constexpr double kRelativeIncrement = 1e-4;
constexpr int kFitSamples = 64;

double bracket(double t) { return std::sqrt(1.0 + t * t); }

double inverse_conjugate(double p) { return std::isinf(p) ? 1.0 : 1.0 - 1.0 / p; }

double power_of(double f, double e) { return e == 0.0 ? 1.0 : std::pow(f, e); }

// Explicit midpoint, sampled on a log grid of the last two decades plus t = 0.
GronwallResult integrate(const std::function<double(double, double)>& rhs, double f0, double T) {
  if (!(T >= 100.0)) throw DomainError("Gronwall horizon T must be at least 100 for a two-decade fit");
  std::vector<double> marks;
  const double t_lo = T / 100.0;
  for (int i = 0; i < kFitSamples; ++i)
    marks.push_back(t_lo * std::pow(100.0, static_cast<double>(i) / (kFitSamples - 1)));
  marks.back() = T;

  GronwallResult r;
  r.times.push_back(0.0);
  r.values.push_back(f0);
  double t = 0.0, f = f0;
  std::size_t next = 0;
  while (next < marks.size()) {
    const double slope = rhs(t, f);
    if (!std::isfinite(slope) || slope < 0.0) throw StiffnessError("Gronwall right-hand side is not finite");
    double h = slope > 0.0 ? kRelativeIncrement * std::max(f, 1.0) / slope : marks[next] - t;
    h = std::min(h, marks[next] - t);
    if (!(h > 1e-14 * std::max(1.0, t))) throw StiffnessError("Gronwall step size underflow");
    const double fm = f + 0.5 * h * slope;
    f += h * rhs(t + 0.5 * h, fm);
    t += h;
    if (t >= marks[next] * (1.0 - 1e-15)) {
      t = marks[next++];
      r.times.push_back(t);
      r.values.push_back(f);
    }
  }
  r.fit = fit_growth_exponent(r.times, r.values, t_lo);
  return r;
}

}  // namespace

double Driver::operator()(double t) const { return power == 0.0 ? 1.0 : std::pow(bracket(t), power); }

std::string Driver::name() const {
  if (power == 0.0) return "one";
  char buf[48];
  std::snprintf(buf, sizeof buf, "bracket^%g", power);
  return buf;
}

void GronwallSpec::validate() const {
  if (variant != 1 && variant != 2) throw SpecError("Gronwall variant must be 1 or 2");
  if (terms.empty()) throw SpecError("Gronwall spec needs at least one term");
  if (!(f0 >= 0.0)) throw SpecError("Gronwall f0 must be >= 0");
  if (variant == 1 && !(f0 > 0.0)) throw PreconditionError("Gronwall variant 1 needs f0 > 0");
  for (const auto& k : terms) {
    if (!(k.lambda > 0.0 && k.lambda <= 1.0)) throw SpecError("Gronwall lambda must lie in (0, 1]");
    if (variant == 1 && !(k.beta > 0.0 || k.beta == 0.0)) throw SpecError("Gronwall beta must be >= 0");
    if (variant == 2) {
      if (!(k.A >= 0.0)) throw SpecError("Gronwall A must be >= 0");
      if (!(k.p >= 1.0)) throw SpecError("Gronwall p must be >= 1");
      if (!(k.g.power >= 0.0)) throw SpecError("Gronwall driver power must be >= 0");
    }
  }
  if (variant == 2 && !(f0 > 0.0))
    for (const auto& k : terms)
      if (k.lambda < 1.0) throw PreconditionError("Gronwall f0 = 0 with lambda < 1 has no unique solution");
}

nlohmann::json GronwallSpec::to_json() const {
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& k : terms) {
    if (variant == 1) {
      ts.push_back({{"lambda", k.lambda}, {"beta", k.beta}});
    } else {
      ts.push_back({{"lambda", k.lambda},
                    {"A", k.A},
                    {"p", std::isinf(k.p) ? nlohmann::json("inf") : nlohmann::json(k.p)},
                    {"g", k.g.name()}});
    }
  }
  return {{"variant", variant}, {"terms", ts}, {"f0", f0}};
}

nlohmann::json GronwallResult::summary() const {
  return {{"exponent", fit.exponent},
          {"residual", fit.residual},
          {"predicted", predicted},
          {"measured_A", measured_A},
          {"saturated", std::abs(fit.exponent - predicted) <= 0.05},
          {"within_bound", fit.exponent <= predicted + 0.1}};
}

double gronwall_alpha_star(const GronwallSpec& spec) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& k : spec.terms) best = std::max(best, (k.beta + 1.0) / k.lambda);
  return best;
}

double gronwall_gamma(const GronwallSpec& spec) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& k : spec.terms) best = std::max(best, (k.A + inverse_conjugate(k.p)) / k.lambda);
  return best;
}

double driver_norm_exponent(const Driver& g, double p, double T) {
  if (!(p >= 1.0)) throw DomainError("driver norm exponent p must be >= 1");
  // Cumulative integral of g^p by composite Simpson on a geometric grid.
  const int per_decade = 200;
  const double t0 = 1e-3;
  const int n = static_cast<int>(std::ceil(std::log10(T / t0) * per_decade));
  std::vector<double> times, norms;
  double acc = std::isinf(p) ? g(0.0) : t0 * std::pow(g(0.0), p);
  double t = t0;
  for (int i = 1; i <= n; ++i) {
    const double t1 = t0 * std::pow(T / t0, static_cast<double>(i) / n);
    if (std::isinf(p)) {
      acc = std::max(acc, g(t1));
    } else {
      const double tm = 0.5 * (t + t1);
      acc += (t1 - t) / 6.0 * (std::pow(g(t), p) + 4.0 * std::pow(g(tm), p) + std::pow(g(t1), p));
    }
    t = t1;
    times.push_back(t);
    norms.push_back(std::isinf(p) ? acc : std::pow(acc, 1.0 / p));
  }
  return fit_growth_exponent(times, norms, T / 100.0).exponent;
}

GronwallResult gronwall_variant_oracle(const GronwallSpec& spec, double T) {
  if (spec.variant != 1) throw SpecError("gronwall_variant_oracle needs a variant 1 spec");
  spec.validate();
  const auto terms = spec.terms;
  GronwallResult r = integrate(
      [terms](double t, double f) {
        double s = 0.0;
        for (const auto& k : terms) s += power_of(f, 1.0 - k.lambda) * std::pow(bracket(t), k.beta);
        return s;
      },
      spec.f0, T);
  r.predicted = gronwall_alpha_star(spec);
  return r;
}

GronwallResult gronwall_variant2_oracle(const GronwallSpec& spec, double T) {
  if (spec.variant != 2) throw SpecError("gronwall_variant2_oracle needs a variant 2 spec");
  spec.validate();
  std::vector<double> measured;
  for (const auto& k : spec.terms) {
    const double a = driver_norm_exponent(k.g, k.p, T);
    if (std::abs(a - k.A) > 0.05) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "declared A = %g for %s in L^%g, measured %.4f", k.A, k.g.name().c_str(), k.p,
                    a);
      throw SpecError(buf);
    }
    measured.push_back(a);
  }
  const auto terms = spec.terms;
  GronwallResult r = integrate(
      [terms](double t, double f) {
        double s = 0.0;
        for (const auto& k : terms) s += power_of(f, 1.0 - k.lambda) * k.g(t);
        return s;
      },
      spec.f0, T);
  r.predicted = gronwall_gamma(spec);
  r.measured_A = measured;
  return r;
}

}  // namespace fnls
