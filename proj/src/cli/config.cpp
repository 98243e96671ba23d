#include "fnls/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "fnls/cli/schema.hpp"
#include "fnls/error.hpp"
#include "fnls/kernel/kernel.hpp"
#include "fnls/version.hpp"

namespace fnls::cli {

namespace {

using json = nlohmann::json;

bool matches(const json& v, FieldType t) {
  auto all = [&](auto pred) {
    return v.is_array() && std::all_of(v.begin(), v.end(), pred);
  };
  switch (t) {
    case FieldType::number: return v.is_number();
    case FieldType::integer: return v.is_number_integer();
    case FieldType::boolean: return v.is_boolean();
    case FieldType::string: return v.is_string();
    case FieldType::number_list: return all([](const json& x) { return x.is_number(); });
    case FieldType::integer_list: return all([](const json& x) { return x.is_number_integer(); });
    case FieldType::object: return v.is_object();
    case FieldType::object_list: return all([](const json& x) { return x.is_object(); });
    case FieldType::extended_number:
      return v.is_number() || (v.is_string() && (v == "inf" || v == "infinity"));
  }
  return false;
}

// Typed access to one JSON object checked against its field table. Problems
// become violations; lookups of broken fields fall back to defaults so that
// parsing can continue and report everything.
class Reader {
 public:
  Reader(const json& obj, const std::vector<FieldSpec>& fields, std::string path, std::vector<Violation>& out)
      : fields_(fields), path_(std::move(path)), out_(out) {
    if (!obj.is_object()) {
      fail("", "must be an object");
      return;
    }
    for (const auto& [key, v] : obj.items()) {
      const FieldSpec* f = spec(key);
      if (!f) {
        fail(key, "unknown field");
      } else if (!matches(v, f->type)) {
        fail(key, std::string("expected ") + type_name(f->type));
      } else {
        values_[key] = v;
      }
    }
    for (const auto& f : fields_)
      if (f.required && !obj.contains(f.name)) fail(f.name, "required field missing");
  }

  bool has(const std::string& key) const { return values_.contains(key); }
  json raw(const std::string& key) const {
    if (has(key)) return values_.at(key);
    return spec(key)->fallback;
  }
  double number(const std::string& key) const {
    const json v = raw(key);
    if (v.is_string()) return std::numeric_limits<double>::infinity();
    return v.is_null() ? 0.0 : v.get<double>();
  }
  long long integer(const std::string& key) const {
    const json v = raw(key);
    return v.is_null() ? 0 : v.get<long long>();
  }
  int small(const std::string& key) const {
    const long long v = integer(key);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      fail(key, "integer out of range");
      return 0;
    }
    return static_cast<int>(v);
  }
  std::optional<double> maybe_number(const std::string& key) const {
    return has(key) ? std::optional<double>(number(key)) : std::nullopt;
  }
  std::string string(const std::string& key) const {
    const json v = raw(key);
    return v.is_string() ? v.get<std::string>() : std::string();
  }
  std::vector<double> numbers(const std::string& key) const {
    const json v = raw(key);
    return v.is_array() ? v.get<std::vector<double>>() : std::vector<double>{};
  }
  std::vector<int> integers(const std::string& key) const {
    std::vector<int> out;
    const json v = raw(key);
    if (!v.is_array()) return out;
    for (const auto& x : v) {
      const long long i = x.get<long long>();
      if (std::abs(i) > (1LL << 30)) fail(key, "integer out of range");
      out.push_back(static_cast<int>(i));
    }
    return out;
  }

  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  void fail(const std::string& key, const std::string& msg) const {
    out_.push_back({key.empty() ? path_ : at(key), msg});
  }
  // Runs f; library errors it raises become violations on key.
  template <class F>
  bool guard(const std::string& key, F&& f) const {
    try {
      f();
      return true;
    } catch (const fnls::Error& e) {
      fail(key, e.what());
    } catch (const nlohmann::json::exception& e) {
      fail(key, e.what());
    }
    return false;
  }
  std::size_t violation_count() const { return out_.size(); }

 private:
  const FieldSpec* spec(const std::string& key) const {
    for (const auto& f : fields_)
      if (f.name == key) return &f;
    return nullptr;
  }

  const std::vector<FieldSpec>& fields_;
  std::string path_;
  std::vector<Violation>& out_;
  std::map<std::string, json> values_;
};

void positive(const Reader& r, const std::string& key, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) r.fail(key, "must be a positive finite number");
}

std::optional<EquationParams> equation(const Reader& r) {
  std::optional<EquationParams> p;
  r.guard("alpha", [&] { p.emplace(r.small("d"), r.number("alpha"), r.small("sigma"), r.small("sign")); });
  return p;
}

InitialDataSpec initial_data(const Reader& parent, const std::optional<std::uint64_t>& seed,
                             std::vector<Violation>& out) {
  const Reader r(parent.raw("initial_data"), initial_data_fields(), parent.at("initial_data"), out);
  InitialDataSpec s;
  s.family = r.string("family");
  s.amplitude = r.number("amplitude");
  s.heat_time = r.number("heat_time");
  s.packet_N = r.small("N");
  s.decay = r.number("decay");
  if (r.has("seed")) s.seed = static_cast<std::uint64_t>(r.integer("seed"));
  else if (seed) s.seed = seed;
  if (s.family != "single-bump" && s.family != "annulus" && s.family != "random-smooth" && r.has("family"))
    r.fail("family", "unknown initial data family '" + s.family + "'");
  if (s.family == "random-smooth" && !s.seed) r.fail("seed", "random-smooth data needs a seed");
  positive(r, "amplitude", s.amplitude);
  return s;
}

void check_grid(const Reader& r, int d, int m) {
  r.guard("m", [&] { TorusGrid(d, m); });
}

DiagnosticsPlan diagnostics(const Reader& r) {
  DiagnosticsPlan plan;
  plan.sobolev = r.numbers("sobolev");
  plan.sup_fractional = r.numbers("sup_fractional");
  plan.modified_energy = r.integers("modified_energy");
  for (int n : plan.modified_energy)
    if (n < 0) r.fail("modified_energy", "orders must be >= 0");
  return plan;
}

Job parse_envelope(const Reader& r) {
  EnvelopeJob j;
  j.alpha = r.number("alpha");
  j.d = r.small("d");
  j.Ns = r.integers("N");
  j.time_points = r.small("time_points");
  j.lower_factor = r.number("lower_factor");
  j.max_abs_slope = r.number("max_abs_slope");
  if (j.alpha == 1.0) r.fail("alpha", HalfWaveExcludedError("envelope-certificate").what());
  if (j.d < 1 || j.d > 2) r.fail("d", "envelope certificates support d = 1 or 2");
  if (j.Ns.size() < 2) r.fail("N", "need at least two frequencies");
  for (int N : j.Ns)
    if (N < 1 || (N & (N - 1)) != 0) r.fail("N", "frequencies must be powers of two");
  if (j.time_points < 2) r.fail("time_points", "need at least two instants");
  positive(r, "lower_factor", j.lower_factor);
  return j;
}

Job parse_strichartz(const Reader& r) {
  StrichartzJob j;
  j.alpha = r.number("alpha");
  j.d = r.small("d");
  j.p = r.number("p");
  j.Ns = r.integers("N");
  j.tolerance = r.number("tolerance");
  j.options.initial_intervals = r.small("initial_intervals");
  j.options.rel_change = r.number("refine_tolerance");
  j.options.max_intervals = r.small("max_intervals");
  if (j.alpha == 1.0) r.fail("alpha", HalfWaveExcludedError("strichartz-scaling").what());
  if (j.d < 1 || j.d > 3) r.fail("d", "dimension must be 1, 2 or 3");
  if (!(j.p >= 1.0)) r.fail("p", "must be >= 1");
  if (j.Ns.size() < 4) r.fail("N", "need at least four frequencies");
  for (int N : j.Ns)
    if (N < 1 || (N & (N - 1)) != 0) r.fail("N", "frequencies must be powers of two");
  if (j.options.initial_intervals < 2) r.fail("initial_intervals", "must be >= 2");
  if (j.options.max_intervals < j.options.initial_intervals) r.fail("max_intervals", "below initial_intervals");
  return j;
}

Job parse_evolve(const Reader& r, const std::optional<std::uint64_t>& seed, std::vector<Violation>& out) {
  EvolveJob j;
  if (auto p = equation(r)) j.params = *p;
  j.m = r.small("m");
  j.T = r.number("T");
  j.dt = r.number("dt");
  j.sample_every = r.small("sample_every");
  j.plan = diagnostics(r);
  j.max_mass_drift = r.maybe_number("max_mass_drift");
  j.max_energy_drift = r.maybe_number("max_energy_drift");
  positive(r, "T", j.T);
  positive(r, "dt", j.dt);
  if (j.dt > j.T) r.fail("dt", "must not exceed T");
  else if (j.T / j.dt > 1e8) r.fail("dt", "T/dt exceeds the 1e8 step budget");
  if (j.sample_every < 1) r.fail("sample_every", "must be >= 1");
  check_grid(r, r.small("d"), j.m);
  if (r.has("initial_data")) j.u0 = initial_data(r, seed, out);
  return j;
}

Job parse_growth(const Reader& r, const std::optional<std::uint64_t>& seed, std::vector<Violation>& out) {
  GrowthJob j;
  auto& c = j.config;
  if (auto p = equation(r)) c.params = *p;
  c.m = r.small("m");
  c.T = r.number("T");
  c.dt = r.number("dt");
  c.n = r.small("n");
  c.sample_every = r.small("sample_every");
  c.burn_in = r.number("burn_in");
  const DiagnosticsPlan plan = diagnostics(r);
  c.sobolev = plan.sobolev;
  c.sup_fractional = plan.sup_fractional;
  c.modified_energy = plan.modified_energy;
  j.slack = r.number("slack");
  j.max_energy_norm_drift = r.maybe_number("max_energy_norm_drift");
  positive(r, "T", c.T);
  positive(r, "dt", c.dt);
  if (c.dt > c.T) r.fail("dt", "must not exceed T");
  else if (c.T / c.dt > 1e8) r.fail("dt", "T/dt exceeds the 1e8 step budget");
  if (c.n < 0) r.fail("n", "must be >= 0");
  if (c.sample_every < 1) r.fail("sample_every", "must be >= 1");
  check_grid(r, r.small("d"), c.m);
  if (r.has("initial_data")) c.u0 = initial_data(r, seed, out);
  if (r.has("accumulation")) {
    const Reader a(r.raw("accumulation"), accumulation_fields(), r.at("accumulation"), out);
    AccumulationConfig acc{a.number("p"), a.number("gamma"), a.number("gamma0"),
                           a.number("b"), a.number("b_prime"), a.number("A")};
    if (a.guard("", [&] { acc.validate(); })) {
      j.accumulation = acc;
      c.sup_fractional.push_back(acc.gamma - acc.gamma0);
    }
  }
  return j;
}

Job parse_gronwall(const Reader& r, std::vector<Violation>& out) {
  GronwallJob j;
  j.spec.variant = r.small("variant");
  j.spec.f0 = r.number("f0");
  j.T = r.number("T");
  const json terms = r.raw("terms");
  if (terms.is_array()) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const Reader t(terms[i], gronwall_term_fields(), r.at("terms") + "[" + std::to_string(i) + "]", out);
      GronwallTerm term;
      term.lambda = t.number("lambda");
      term.beta = t.number("beta");
      term.A = t.number("A");
      term.p = t.number("p");
      term.g.power = t.number("g_power");
      j.spec.terms.push_back(term);
    }
  }
  if (!(j.T >= 100.0)) r.fail("T", "horizon must be at least 100");
  r.guard("terms", [&] { j.spec.validate(); });
  return j;
}

Job parse_leibniz(const Reader& r) {
  LeibnizJob j;
  j.d = r.small("d");
  j.m = r.small("m");
  j.s = r.numbers("s");
  j.alpha = r.number("alpha");
  j.tolerance = r.number("tolerance");
  check_grid(r, j.d, j.m);
  auto mode = [&](const std::string& key, std::array<int, 3>& k) {
    const auto v = r.integers(key);
    if (static_cast<int>(v.size()) != j.d) {
      r.fail(key, "needs one entry per axis");
      return;
    }
    for (int a = 0; a < j.d; ++a) {
      k[a] = v[a];
      if (std::abs(4 * v[a]) >= j.m) r.fail(key, "mode too large for the grid, need |4 k_i| < m");
    }
  };
  mode("k", j.k);
  if (r.has("k2")) mode("k2", j.k2);
  else
    for (int a = 0; a < 3; ++a) j.k2[a] = -2 * j.k[a];
  for (double s : j.s)
    if (!(s >= 0.0)) r.fail("s", "exponents must be >= 0");
  positive(r, "alpha", j.alpha);
  positive(r, "tolerance", j.tolerance);
  return j;
}

Job parse_kernel_dump(const Reader& r) {
  KernelDumpJob j;
  j.N = r.small("N");
  j.alpha = r.number("alpha");
  j.d = r.small("d");
  j.t = r.number("t");
  if (j.alpha == 1.0) r.fail("alpha", HalfWaveExcludedError("kernel-dump").what());
  if (j.N < 1 || (j.N & (j.N - 1)) != 0) r.fail("N", "must be a power of two");
  if (!std::isfinite(j.t)) r.fail("t", "must be finite");
  if (r.has("m")) j.m = r.small("m");
  else if (j.N >= 1 && j.N < (1 << 20)) j.m = kernel_grid_points(j.N);
  if (j.m < 4 * j.N) r.fail("m", "need m >= 4N");
  check_grid(r, j.d, j.m);
  return j;
}

}  // namespace

json read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigFileError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ConfigFileError("config file " + path.string() + " is not valid JSON: " + e.what());
  }
}

RunConfig parse_config(const json& doc, std::vector<Violation>& out) {
  RunConfig cfg;
  const Reader top(doc, top_level_fields(), "", out);
  if (top.has("schema_version") && top.string("schema_version") != kVersion)
    top.fail("schema_version", "config targets schema " + top.string("schema_version") + ", this tool is " + kVersion);
  cfg.output_dir = top.string("output_dir");
  std::optional<std::uint64_t> global_seed;
  if (top.has("seed")) global_seed = static_cast<std::uint64_t>(top.integer("seed"));

  const json exps = top.raw("experiments");
  if (!exps.is_array()) return cfg;
  if (exps.empty()) top.fail("experiments", "no experiments listed");
  std::set<std::string> names;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const std::string path = "experiments[" + std::to_string(i) + "]";
    const json& e = exps[i];
    if (!e.is_object()) continue;
    const std::string kind = e.contains("kind") && e["kind"].is_string() ? e["kind"].get<std::string>() : "";
    const KindSpec* spec = find_kind(kind);

    // The kind block is the one extra key.
    std::vector<FieldSpec> fields = experiment_fields();
    if (spec) fields.push_back({kind, FieldType::object, true, nullptr, ""});
    const std::size_t before = out.size();
    const Reader r(e, fields, path, out);
    if (!spec) {
      if (e.contains("kind")) r.fail("kind", "unknown experiment kind '" + kind + "'");
      continue;
    }
    Experiment x;
    x.kind = kind;
    x.name = r.has("name") ? r.string("name") : kind + "-" + std::to_string(i);
    if (x.name.empty() || x.name.find_first_of("/\\") != std::string::npos || x.name[0] == '.')
      r.fail("name", "must be a plain file stem");
    if (!names.insert(x.name).second) r.fail("name", "duplicate experiment name '" + x.name + "'");
    std::optional<std::uint64_t> seed = global_seed;
    if (r.has("seed")) seed = static_cast<std::uint64_t>(r.integer("seed"));
    if (!r.has(kind)) continue;

    const Reader b(r.raw(kind), spec->fields, r.at(kind), out);
    if (kind == "envelope-certificate") x.job = parse_envelope(b);
    else if (kind == "strichartz-scaling") x.job = parse_strichartz(b);
    else if (kind == "evolve") x.job = parse_evolve(b, seed, out);
    else if (kind == "growth") x.job = parse_growth(b, seed, out);
    else if (kind == "gronwall") x.job = parse_gronwall(b, out);
    else if (kind == "leibniz-suite") x.job = parse_leibniz(b);
    else x.job = parse_kernel_dump(b);
    if (out.size() == before) cfg.experiments.push_back(std::move(x));
  }
  return cfg;
}

}  // namespace fnls::cli
