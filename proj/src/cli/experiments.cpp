#include "fnls/cli/experiments.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

#include "fnls/energetics/leibniz.hpp"
#include "fnls/evolution/evolve.hpp"
#include "fnls/io/atomic_file.hpp"
#include "fnls/io/csv.hpp"
#include "fnls/kernel/envelope.hpp"
#include "fnls/kernel/kernel.hpp"
#include "fnls/spectral/multiplier.hpp"
#include "fnls/spectral/norms.hpp"
#include "fnls/version.hpp"

namespace fnls::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

CheckResult at_most(std::string name, double value, double limit) {
  return {std::move(name), value <= limit, value, limit};
}

json checks_json(const std::vector<CheckResult>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"limit", c.limit}});
  return a;
}

void write_summary(const fs::path& dir, const ExperimentOutcome& o, json body) {
  body["name"] = o.name;
  body["kind"] = o.kind;
  body["version"] = kVersion;
  body["checks"] = checks_json(o.checks);
  body["pass"] = o.pass();
  write_file_atomic(dir / (o.name + ".json"), body.dump(2) + "\n");
}

void envelope(const EnvelopeJob& j, const fs::path& dir, ExperimentOutcome& o) {
  const EnvelopeReport rep = envelope_certificate(j.Ns, j.alpha, j.d, LogTimeGrid{j.time_points, j.lower_factor});
  write_file_atomic(dir / (o.name + ".csv"), envelope_table(rep).str());
  o.checks.push_back(at_most("envelope-slope", std::abs(rep.slope), j.max_abs_slope));
  o.headline = fmt("slope %.4f", rep.slope);
  write_summary(dir, o, envelope_summary(rep));
}

void strichartz(const StrichartzJob& j, const fs::path& dir, ExperimentOutcome& o) {
  const StrichartzScaling sc = strichartz_scaling(j.alpha, j.p, j.d, j.Ns, j.options);
  write_file_atomic(dir / (o.name + ".csv"), strichartz_table(sc).str());
  o.checks.push_back(at_most("strichartz-slope", std::abs(sc.slope - sc.predicted), j.tolerance));
  o.headline = fmt("slope %.4f predicted %.4f", sc.slope, sc.predicted);
  write_summary(dir, o, strichartz_summary(sc));
}

void evolve_run(const EvolveJob& j, const fs::path& dir, ExperimentOutcome& o) {
  const TorusGrid grid(j.params.d(), j.m);
  const RunRecord rec = evolve(make_initial_data(grid, j.u0), j.T, j.dt, j.params, j.sample_every, j.plan);
  rec.write(dir, o.name);
  const double dm = rec.relative_drift("mass");
  const double de = rec.relative_drift("energy");
  if (j.max_mass_drift) o.checks.push_back(at_most("mass-drift", dm, *j.max_mass_drift));
  if (j.max_energy_drift) o.checks.push_back(at_most("energy-drift", de, *j.max_energy_drift));
  o.headline = fmt("mass drift %.3e energy drift %.3e", dm, de);
  write_summary(dir, o, {{"mass_drift", dm}, {"energy_drift", de}, {"t_final", rec.times().back()},
                         {"samples", rec.size()}, {"record", rec.metadata()}});
}

void growth(const GrowthJob& j, const fs::path& dir, ExperimentOutcome& o) {
  const GrowthResult r = growth_experiment(j.config);
  r.record.write(dir, o.name);
  json body = r.summary();
  if (r.bound) o.checks.push_back(at_most("growth-exponent", r.tracked.exponent, *r.bound + j.slack));
  if (j.max_energy_norm_drift)
    o.checks.push_back(at_most("energy-norm-drift", r.energy_norm_drift, *j.max_energy_norm_drift));
  if (j.accumulation) {
    const AccumulationResult acc = strichartz_accumulation(r.record, *j.accumulation, j.config.burn_in);
    o.checks.push_back(at_most("accumulation-exponent", acc.fit.exponent, acc.reference));
    body["accumulation"] = acc.summary();
  }
  o.headline = fmt("H^%g exponent %.4f", r.s_tracked, r.tracked.exponent);
  write_summary(dir, o, body);
}

void gronwall(const GronwallJob& j, const fs::path& dir, ExperimentOutcome& o) {
  const GronwallResult r =
      j.spec.variant == 1 ? gronwall_variant_oracle(j.spec, j.T) : gronwall_variant2_oracle(j.spec, j.T);
  CsvTable t({"t", "f"});
  for (std::size_t i = 0; i < r.times.size(); ++i) t.add_row({r.times[i], r.values[i]});
  write_file_atomic(dir / (o.name + ".csv"), t.str());
  o.checks.push_back(at_most("gronwall-exponent", r.fit.exponent, r.predicted + 0.1));
  o.headline = fmt("exponent %.4f predicted %.4f", r.fit.exponent, r.predicted);
  json body = r.summary();
  body["spec"] = j.spec.to_json();
  write_summary(dir, o, body);
}

double max_abs(const SpectralField& f) { return f.coeff().abs().maxCoeff(); }

void leibniz(const LeibnizJob& j, const fs::path& dir, ExperimentOutcome& o) {
  const TorusGrid grid(j.d, j.m);
  const SpectralField e1 = SpectralField::mode(grid, j.k);
  const SpectralField e2 = SpectralField::mode(grid, j.k2);
  double kk = 0.0;
  std::array<int, 3> twice{};
  for (int a = 0; a < j.d; ++a) {
    kk += double(j.k[a]) * j.k[a];
    twice[a] = 2 * j.k[a];
  }
  const double knorm = std::sqrt(kk);
  CsvTable t({"s", "expected", "measured", "error"});

  // Order 1 on f = g = e^{ikx}: only the mode 2k survives.
  SpectralField first_defect(grid);
  for (std::size_t i = 0; i < j.s.size(); ++i) {
    const double s = j.s[i];
    const SpectralField d = leibniz_defect(e1, e1, s, 1);
    if (i == 0) first_defect = d;
    const double expected = (std::pow(2.0, s) - 2.0) * std::pow(knorm, s);
    SpectralField rest = d;
    const auto c = rest.at(twice);
    rest.at(twice) = 0.0;
    const double err = std::max(std::abs(c - expected), max_abs(rest));
    const double scale = std::max(1.0, std::pow(knorm, s));
    o.checks.push_back(at_most(fmt("order1-s%g", s), err / scale, j.tolerance));
    t.add_row({s, expected, c.real(), err});
  }

  // Order 2 at s = 2 on two-mode inputs vanishes identically.
  const SpectralField f = e1 + 0.5 * e2;
  const SpectralField g = e2 - std::complex<double>(0.0, 0.25) * e1;
  const double scale = std::max(1.0, kk) * std::max(max_abs(f), 1.0) * std::max(max_abs(g), 1.0);
  o.checks.push_back(at_most("order2-s2-zero", max_abs(leibniz_defect(f, g, 2.0, 2)) / scale, j.tolerance));

  // F_alpha(e^{ikx}) = 2|k|^alpha, a constant.
  SpectralField F = commutator(e1, j.alpha);
  const double want = 2.0 * std::pow(knorm, j.alpha);
  const auto c0 = F.at({0, 0, 0});
  F.at({0, 0, 0}) = 0.0;
  const double ferr = std::max(std::abs(c0 - want), max_abs(F)) / std::max(1.0, want);
  o.checks.push_back(at_most("commutator-single-mode", ferr, j.tolerance));

  write_file_atomic(dir / (o.name + ".csv"), t.str());
  write_file_atomic(dir / (o.name + ".coefficients.csv"), coefficient_table(first_defect).str());
  int failed = 0;
  for (const auto& c : o.checks) failed += !c.pass;
  o.headline = fmt("%g checks, %g failed", double(o.checks.size()), double(failed));
  write_summary(dir, o, {{"k", std::vector<int>(j.k.begin(), j.k.begin() + j.d)}, {"alpha", j.alpha}});
}

void kernel_dump(const KernelDumpJob& j, const fs::path& dir, ExperimentOutcome& o) {
  const TorusGrid grid(j.d, j.m);
  const Eigen::ArrayXcd k = kernel_eval(j.N, j.alpha, j.t, grid);
  std::vector<std::string> header;
  for (int a = 0; a < j.d; ++a) header.push_back("x" + std::to_string(a));
  header.insert(header.end(), {"re", "im", "abs"});
  CsvTable t(header);
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    std::vector<double> row;
    for (int a = 0; a < j.d; ++a) row.push_back(grid.node(i, a));
    row.insert(row.end(), {k(i).real(), k(i).imag(), std::abs(k(i))});
    t.add_row(std::move(row));
  }
  write_file_atomic(dir / (o.name + ".csv"), t.str());
  const double sup = k.abs().maxCoeff();
  const double omega = decay_envelope(j.N, j.alpha, j.d, j.t);
  o.headline = fmt("sup %.6g envelope %.6g", sup, omega);
  write_summary(dir, o, {{"N", j.N}, {"alpha", j.alpha}, {"d", j.d}, {"t", j.t}, {"m", j.m},
                         {"sup_kappa", sup}, {"omega", omega}});
}

}  // namespace

bool ExperimentOutcome::pass() const {
  if (!error.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ExperimentOutcome::line() const {
  std::string s = (pass() ? "PASS " : "FAIL ") + kind + " " + name;
  if (!error.empty()) return s + ": " + error;
  if (!headline.empty()) s += ": " + headline;
  for (const auto& c : checks)
    if (!c.pass) s += " [check " + c.name + " " + format_double(c.value) + " > " + format_double(c.limit) + "]";
  return s;
}

ExperimentOutcome run_experiment(const Experiment& e, const fs::path& dir) {
  ExperimentOutcome o;
  o.name = e.name;
  o.kind = e.kind;
  try {
    std::visit(
        [&](const auto& job) {
          using J = std::decay_t<decltype(job)>;
          if constexpr (std::is_same_v<J, EnvelopeJob>) envelope(job, dir, o);
          else if constexpr (std::is_same_v<J, StrichartzJob>) strichartz(job, dir, o);
          else if constexpr (std::is_same_v<J, EvolveJob>) evolve_run(job, dir, o);
          else if constexpr (std::is_same_v<J, GrowthJob>) growth(job, dir, o);
          else if constexpr (std::is_same_v<J, GronwallJob>) gronwall(job, dir, o);
          else if constexpr (std::is_same_v<J, LeibnizJob>) leibniz(job, dir, o);
          else kernel_dump(job, dir, o);
        },
        e.job);
  } catch (const BlowUpError& ex) {
    ex.partial().write(dir, e.name + ".partial");
    o.error = ex.what();
  } catch (const std::exception& ex) {
    o.error = ex.what();
  }
  return o;
}

}  // namespace fnls::cli
