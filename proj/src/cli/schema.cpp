#include "fnls/cli/schema.hpp"

#include "fnls/version.hpp"

namespace fnls::cli {

namespace {

using json = nlohmann::json;
using T = FieldType;

FieldSpec req(std::string name, T type, std::string desc) { return {std::move(name), type, true, nullptr, std::move(desc)}; }
FieldSpec opt(std::string name, T type, json fallback, std::string desc) {
  return {std::move(name), type, false, std::move(fallback), std::move(desc)};
}

std::vector<FieldSpec> equation_fields() {
  return {req("d", T::integer, "torus dimension, 1 to 3"),
          req("alpha", T::number, "dispersion order, positive and not 1"),
          opt("sigma", T::integer, 1, "nonlinearity |u|^{2 sigma} u"),
          opt("sign", T::integer, 1, "+1 defocusing, -1 focusing")};
}

std::vector<FieldSpec> join(std::vector<FieldSpec> a, const std::vector<FieldSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

json field_json(const FieldSpec& f) {
  json j{{"type", type_name(f.type)}, {"required", f.required}, {"description", f.description}};
  if (!f.fallback.is_null()) j["default"] = f.fallback;
  return j;
}

json fields_json(const std::vector<FieldSpec>& fs) {
  json j = json::object();
  for (const auto& f : fs) j[f.name] = field_json(f);
  return j;
}

}  // namespace

const char* type_name(FieldType t) {
  switch (t) {
    case T::number: return "number";
    case T::integer: return "integer";
    case T::boolean: return "boolean";
    case T::string: return "string";
    case T::number_list: return "array of numbers";
    case T::integer_list: return "array of integers";
    case T::object: return "object";
    case T::object_list: return "array of objects";
    case T::extended_number: return "number or \"inf\"";
  }
  return "?";
}

const std::vector<FieldSpec>& top_level_fields() {
  static const std::vector<FieldSpec> f{
      opt("schema_version", T::string, nullptr, "must equal the tool version when given"),
      opt("output_dir", T::string, "fnls-out", "directory for all outputs, --out overrides it"),
      opt("seed", T::integer, nullptr, "fallback seed for randomized data"),
      req("experiments", T::object_list, "experiment entries, run independently")};
  return f;
}

const std::vector<FieldSpec>& experiment_fields() {
  static const std::vector<FieldSpec> f{
      req("kind", T::string, "experiment kind"),
      opt("name", T::string, nullptr, "output file stem, defaults to <kind>-<index>"),
      opt("seed", T::integer, nullptr, "seed for randomized data, overrides the top-level seed")};
  return f;
}

const std::vector<FieldSpec>& initial_data_fields() {
  static const std::vector<FieldSpec> f{
      req("family", T::string, "single-bump, annulus or random-smooth"),
      opt("amplitude", T::number, 1.0, "grid maximum of |u0|"),
      opt("seed", T::integer, nullptr, "random-smooth seed, falls back to the experiment seed"),
      opt("heat_time", T::number, 0.1, "single-bump: coefficients exp(-heat_time |k|^2)"),
      opt("N", T::integer, 4, "annulus: frequencies in [N, 2N]"),
      opt("decay", T::number, 2.0, "random-smooth: coefficients times (1 + |k|^2)^(-decay)")};
  return f;
}

const std::vector<FieldSpec>& gronwall_term_fields() {
  static const std::vector<FieldSpec> f{
      req("lambda", T::number, "exponent in (0, 1], the term is f^(1 - lambda)"),
      opt("beta", T::number, 0.0, "variant 1: time weight <t>^beta"),
      opt("A", T::number, 0.0, "variant 2: declared L^p growth exponent of g"),
      opt("p", T::extended_number, 1.0, "variant 2: Lebesgue exponent of g"),
      opt("g_power", T::number, 0.0, "variant 2: driver g(t) = <t>^g_power")};
  return f;
}

const std::vector<FieldSpec>& accumulation_fields() {
  static const std::vector<FieldSpec> f{
      req("p", T::number, "time exponent, the norm is L^{2p}"),
      req("gamma", T::number, "regularity gamma"),
      req("gamma0", T::number, "gamma0 < gamma"),
      req("b", T::number, "in (1/2, 1)"),
      req("b_prime", T::number, "b + b_prime < 1"),
      req("A", T::number, "a-priori growth exponent, >= 0")};
  return f;
}

const std::vector<KindSpec>& experiment_kinds() {
  static const std::vector<KindSpec> kinds{
      {"envelope-certificate",
       "max_t sup_x |kappa_N| / omega_N(t) for several N, with its log-log slope",
       {req("alpha", T::number, "dispersion order"), req("d", T::integer, "dimension, 1 or 2"),
        req("N", T::integer_list, "dyadic frequencies"), opt("time_points", T::integer, 64, "log-spaced instants"),
        opt("lower_factor", T::number, 0.25, "time grid starts above lower_factor * N^-alpha"),
        opt("max_abs_slope", T::number, 0.2, "check: |slope| <= max_abs_slope")}},
      {"strichartz-scaling",
       "wavepacket Strichartz quotients against N and the fitted exponent",
       {req("alpha", T::number, "dispersion order"), req("d", T::integer, "dimension"),
        req("p", T::extended_number, "time exponent, the norm is L^{2p}_t L^inf_x"),
        req("N", T::integer_list, "at least four frequencies"),
        opt("tolerance", T::number, 0.15, "check: |slope - predicted| <= tolerance"),
        opt("initial_intervals", T::integer, 1024, "first time grid"),
        opt("refine_tolerance", T::number, 0.005, "relative change that stops grid doubling"),
        opt("max_intervals", T::integer, 65536, "largest time grid")}},
      {"evolve",
       "split-step run with sampled diagnostics",
       join(equation_fields(),
            {req("m", T::integer, "points per axis"), req("T", T::number, "final time"),
             req("dt", T::number, "time step"), opt("sample_every", T::integer, 1, "steps between samples"),
             req("initial_data", T::object, "initial data block"),
             opt("sobolev", T::number_list, json::array(), "H^s norms to sample"),
             opt("sup_fractional", T::number_list, json::array(), "sup_x ||D|^s u| to sample"),
             opt("modified_energy", T::integer_list, json::array(), "modified energy orders to sample"),
             opt("max_mass_drift", T::number, nullptr, "check on the relative mass drift"),
             opt("max_energy_drift", T::number, nullptr, "check on the relative energy drift")})},
      {"growth",
       "long run with Sobolev exponent fits against the polynomial bound",
       join(equation_fields(),
            {req("m", T::integer, "points per axis"), req("T", T::number, "final time"),
             req("dt", T::number, "time step"), opt("n", T::integer, 0, "tracks the H^{alpha+n} norm"),
             opt("sample_every", T::integer, 10, "steps between samples"),
             opt("burn_in", T::number, 1.0, "fits ignore t < burn_in"),
             req("initial_data", T::object, "initial data block"),
             opt("sobolev", T::number_list, json::array(), "extra H^s norms"),
             opt("sup_fractional", T::number_list, json::array(), "sup_x ||D|^s u| to sample"),
             opt("modified_energy", T::integer_list, json::array(), "modified energy orders to sample"),
             opt("slack", T::number, 0.1, "check: exponent <= bound + slack when alpha > d"),
             opt("max_energy_norm_drift", T::number, nullptr, "check on the H^{alpha/2} norm drift"),
             opt("accumulation", T::object, nullptr, "time-slab accumulation block")})},
      {"gronwall",
       "Gronwall ODE oracle against its predicted exponent",
       {req("variant", T::integer, "1 or 2"), opt("f0", T::number, 1.0, "initial value"),
        opt("T", T::number, 1e4, "horizon, at least 100"), req("terms", T::object_list, "term list")}},
      {"leibniz-suite",
       "closed-form checks of the Leibniz defects and the commutator",
       {opt("d", T::integer, 1, "dimension"), opt("m", T::integer, 64, "points per axis"),
        req("k", T::integer_list, "mode of the single-mode inputs, one entry per axis"),
        opt("k2", T::integer_list, nullptr, "second mode, defaults to -2k"),
        opt("s", T::number_list, json::array({0.5, 1.0, 1.5, 3.0}), "order-1 exponents"),
        opt("alpha", T::number, 1.5, "commutator order"),
        opt("tolerance", T::number, 1e-10, "absolute tolerance relative to the input scale")}},
      {"kernel-dump",
       "samples of the frequency-localized kernel kappa_N(t, x)",
       {req("N", T::integer, "dyadic frequency"), req("alpha", T::number, "dispersion order"),
        opt("d", T::integer, 1, "dimension"), req("t", T::number, "time"),
        opt("m", T::integer, nullptr, "points per axis, defaults to the oversampled kernel grid")}},
  };
  return kinds;
}

const KindSpec* find_kind(const std::string& kind) {
  for (const auto& k : experiment_kinds())
    if (k.kind == kind) return &k;
  return nullptr;
}

nlohmann::json schema_document() {
  json kinds = json::object();
  for (const auto& k : experiment_kinds())
    kinds[k.kind] = {{"description", k.description}, {"block", k.kind}, {"fields", fields_json(k.fields)}};
  return {{"schema_version", kVersion},
          {"format", "json"},
          {"top_level", fields_json(top_level_fields())},
          {"experiment", fields_json(experiment_fields())},
          {"initial_data", fields_json(initial_data_fields())},
          {"gronwall_term", fields_json(gronwall_term_fields())},
          {"accumulation", fields_json(accumulation_fields())},
          {"kinds", kinds}};
}

}  // namespace fnls::cli
