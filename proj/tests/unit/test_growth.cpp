#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fnls/error.hpp"
#include "fnls/growth/accumulation.hpp"
#include "fnls/growth/experiment.hpp"
#include "fnls/growth/fit.hpp"
#include "fnls/growth/gronwall.hpp"
#include "fnls/growth/initial_data.hpp"
#include "fnls/spectral.hpp"
#include "fnls/util/counter_rng.hpp"
#include "oracles.hpp"

using namespace fnls;

namespace {

std::vector<double> log_times(double lo, double hi, int n) {
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
  return t;
}

double bracket(double t) { return std::sqrt(1.0 + t * t); }

GronwallTerm v1(double lambda, double beta) {
  GronwallTerm k;
  k.lambda = lambda;
  k.beta = beta;
  return k;
}

GronwallTerm v2(double lambda, double A, double p, double power) {
  GronwallTerm k;
  k.lambda = lambda;
  k.A = A;
  k.p = p;
  k.g = Driver{power};
  return k;
}

}  // namespace

TEST_CASE("growth bound") {
  CHECK(growth_bound(3, 2, 0) == doctest::Approx(3.0));
  CHECK(growth_bound(3, 2, 1) == doctest::Approx(5.0));
  CHECK(growth_bound(4, 2, 0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(growth_bound(2, 2, 0), RegimeError);
  CHECK_THROWS_AS(growth_bound(1.5, 2, 0), RegimeError);
}

TEST_CASE("exponent fits on synthetic series") {
  const auto t = log_times(1.0, 1000.0, 40);
  std::vector<double> pw, flat, noisy;
  oracle::TestRng rng(3);
  for (double x : t) {
    pw.push_back(std::pow(1 + x, 2.5));
    flat.push_back(4.2);
    noisy.push_back(std::pow(1 + x, 2.0) * (1.0 + 0.01 * rng.symmetric()));
  }
  CHECK(fit_growth_exponent(t, pw).exponent == doctest::Approx(2.5).epsilon(0.004));
  CHECK(std::abs(fit_growth_exponent(t, flat).exponent) < 0.01);
  CHECK(std::abs(fit_growth_exponent(t, noisy).exponent - 2.0) < 0.05);

  std::vector<double> scaled = noisy;
  for (double& v : scaled) v *= 17.3;
  const auto a = fit_growth_exponent(t, noisy), b = fit_growth_exponent(t, scaled);
  CHECK(std::abs(a.exponent - b.exponent) < 1e-10);
  CHECK(b.intercept - a.intercept == doctest::Approx(std::log(17.3)));
}

TEST_CASE("exponent fit preconditions") {
  const auto t = log_times(1.0, 1000.0, 7);
  const std::vector<double> v(7, 1.0);
  CHECK_THROWS_AS(fit_growth_exponent(t, v), SpanError);
  const auto narrow = log_times(1.0, 5.0, 20);
  CHECK_THROWS_AS(fit_growth_exponent(narrow, std::vector<double>(20, 1.0)), SpanError);
  // burn-in drops the early samples
  const auto wide = log_times(0.01, 100.0, 30);
  CHECK_THROWS_AS(fit_growth_exponent(wide, std::vector<double>(30, 1.0), 50.0), SpanError);
  CHECK(fit_growth_exponent(wide, std::vector<double>(30, 1.0)).samples < 30);
  CHECK_THROWS_AS(fit_growth_exponent(wide, std::vector<double>(29, 1.0)), DimensionError);
}

TEST_CASE("counter rng") {
  const CounterRng r(0);
  CHECK(r.bits(0) == 0xe220a8397b1dcdafULL);
  CHECK(r.bits(1) == 0x6e789e6aa1b965f4ULL);
  CHECK(r.bits(2) == 0x06c45d188009454fULL);
  const CounterRng s(42);
  CHECK(s.bits(1234) == CounterRng(42).bits(1234));
  double sum = 0.0, sq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform(i);
    CHECK_FALSE((u < 0.0 || u >= 1.0));
    const double z = s.normal(i);
    sum += z;
    sq += z * z;
  }
  CHECK(std::abs(sum / n) < 0.02);
  CHECK(std::abs(sq / n - 1.0) < 0.02);
}

TEST_CASE("initial data families") {
  const TorusGrid g(2, 64);
  InitialDataSpec bump;
  bump.amplitude = 0.7;
  const SpectralField b = make_initial_data(g, bump);
  CHECK(synthesize(b).abs().maxCoeff() == doctest::Approx(0.7).epsilon(1e-13));
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const auto k = g.mode(i);
    if (std::abs(k[0]) > 21 || std::abs(k[1]) > 21) CHECK(b.coeff()(i) == std::complex<double>(0.0));
  }
  CHECK(max_abs_difference(make_initial_data(g, bump), b) == 0.0);

  InitialDataSpec rs;
  rs.family = "random-smooth";
  CHECK_THROWS_AS(make_initial_data(g, rs), PreconditionError);
  rs.seed = 11;
  const SpectralField r1 = make_initial_data(g, rs);
  CHECK((r1.coeff() == make_initial_data(g, rs).coeff()).all());
  rs.seed = 12;
  CHECK(max_abs_difference(make_initial_data(g, rs), r1) > 1e-3);

  // One seed fixes the low modes on every grid, up to the amplitude scale.
  rs.seed = 11;
  const SpectralField r2 = make_initial_data(TorusGrid(2, 32), rs);
  const std::complex<double> ratio = r1.at({1, 2, 0}) / r2.at({1, 2, 0});
  for (int a = -10; a <= 10; ++a)
    for (int c = -10; c <= 10; ++c)
      CHECK(std::abs(r1.at({a, c, 0}) - ratio * r2.at({a, c, 0})) < 1e-12);

  InitialDataSpec an;
  an.family = "annulus";
  an.packet_N = 8;
  const SpectralField w = make_initial_data(g, an);
  CHECK(std::abs(w.at({8, 0, 0})) > 0.0);
  CHECK(std::abs(w.at({7, 0, 0})) == 0.0);
  an.packet_N = 16;
  CHECK_THROWS_AS(make_initial_data(g, an), ResolutionError);

  InitialDataSpec bad;
  bad.family = "plateau";
  CHECK_THROWS_AS(make_initial_data(g, bad), SpecError);
}

TEST_CASE("gronwall variant 1 matrix") {
  struct Row { std::vector<GronwallTerm> terms; double alpha_star; bool saturated; };
  const std::vector<Row> rows{
      {{v1(0.5, 0.0)}, 2.0, true},
      {{v1(1.0, 1.0)}, 2.0, true},
      {{v1(1.0, 0.0), v1(0.5, 0.0)}, 2.0, true},
      {{v1(1.0, 0.0)}, 1.0, true},
      {{v1(1.0 / 3, 0.0)}, 3.0, true},
      {{v1(0.5, 1.0)}, 4.0, true},
      {{v1(0.5, 0.5), v1(1.0, 0.5)}, 3.0, true},
      {{v1(0.8, 0.2)}, 1.5, true},
  };
  for (const auto& row : rows) {
    GronwallSpec spec;
    spec.terms = row.terms;
    CHECK(gronwall_alpha_star(spec) == doctest::Approx(row.alpha_star));
    const GronwallResult r = gronwall_variant_oracle(spec, 1e4);
    CHECK(r.predicted == doctest::Approx(row.alpha_star));
    CHECK(r.fit.exponent <= row.alpha_star + 0.1);
    if (row.saturated) CHECK(std::abs(r.fit.exponent - row.alpha_star) <= 0.05);
  }
}

TEST_CASE("gronwall closed forms") {
  GronwallSpec sq;
  sq.terms = {v1(0.5, 0.0)};
  const GronwallResult a = gronwall_variant_oracle(sq, 100.0);
  for (std::size_t i = 0; i < a.times.size(); i += 97)
    CHECK(a.values[i] == doctest::Approx(std::pow(1 + a.times[i] / 2, 2)).epsilon(1e-6));

  GronwallSpec lin;
  lin.terms = {v1(1.0, 1.0)};
  lin.f0 = 2.0;
  const GronwallResult b = gronwall_variant_oracle(lin, 100.0);
  for (std::size_t i = 0; i < b.times.size(); i += 97) {
    const double t = b.times[i];
    CHECK(b.values[i] == doctest::Approx(2.0 + 0.5 * (t * bracket(t) + std::asinh(t))).epsilon(1e-6));
  }
  CHECK_THROWS_AS(gronwall_variant_oracle(lin, 50.0), DomainError);
  GronwallSpec bad;
  bad.terms = {v1(1.5, 0.0)};
  CHECK_THROWS_AS(bad.validate(), SpecError);
  bad.terms = {v1(0.5, 0.0)};
  bad.f0 = 0.0;
  CHECK_THROWS_AS(gronwall_variant_oracle(bad, 100.0), PreconditionError);
}

TEST_CASE("driver norm exponents") {
  CHECK(driver_norm_exponent(Driver{0.0}, 2.0, 1e4) == doctest::Approx(0.5).epsilon(0.02));
  CHECK(std::abs(driver_norm_exponent(Driver{0.0}, kInfinity, 1e4)) < 0.01);
  CHECK(driver_norm_exponent(Driver{0.5}, 2.0, 1e4) == doctest::Approx(1.0).epsilon(0.02));
  CHECK(driver_norm_exponent(Driver{1.0}, 1.0, 1e4) == doctest::Approx(2.0).epsilon(0.02));
  CHECK(Driver{0.0}(5.0) == 1.0);
  CHECK(Driver{0.5}(3.0) == doctest::Approx(std::pow(10.0, 0.25)));
}

TEST_CASE("gronwall variant 2 matrix") {
  struct Row { std::vector<GronwallTerm> terms; double gamma; };
  const std::vector<Row> rows{
      {{v2(1.0, 0.5, 2.0, 0.0)}, 1.0},
      {{v2(0.5, 0.0, kInfinity, 0.0)}, 2.0},
      {{v2(1.0, 1.0, 2.0, 0.5)}, 1.5},
      {{v2(1.0, 2.0, 1.0, 1.0)}, 2.0},
      {{v2(0.5, 1.5, 2.0, 1.0)}, 4.0},
      {{v2(1.0, 0.5, 2.0, 0.0), v2(0.5, 0.0, kInfinity, 0.0)}, 2.0},
  };
  for (const auto& row : rows) {
    GronwallSpec spec;
    spec.variant = 2;
    spec.terms = row.terms;
    CHECK(gronwall_gamma(spec) == doctest::Approx(row.gamma));
    const GronwallResult r = gronwall_variant2_oracle(spec, 1e4);
    CHECK(r.measured_A.size() == row.terms.size());
    CHECK(r.fit.exponent <= row.gamma + 0.1);
    CHECK(std::abs(r.fit.exponent - row.gamma) <= 0.05);
  }
  GronwallSpec wrong;
  wrong.variant = 2;
  wrong.terms = {v2(1.0, 1.0, 2.0, 0.0)};
  CHECK_THROWS_AS(gronwall_variant2_oracle(wrong, 1e4), SpecError);
  CHECK_THROWS_AS(gronwall_variant_oracle(wrong, 1e4), SpecError);
}

TEST_CASE("accumulation config") {
  AccumulationConfig acc;
  acc.A = 1.0;
  CHECK(acc.reference_exponent() == doctest::Approx(12.0));
  acc.b = 0.4;
  CHECK_THROWS_AS(acc.validate(), SpecError);
  acc.b = 0.9;
  CHECK_THROWS_AS(acc.validate(), SpecError);
  acc = {};
  acc.p = 1.0;
  CHECK_THROWS_AS(acc.validate(), SpecError);
  acc = {};
  acc.gamma0 = 1.0;
  CHECK_THROWS_AS(acc.validate(), SpecError);
}

TEST_CASE("accumulation on synthetic series") {
  const int n = 20001;
  std::vector<double> t(n), flat(n, 3.0), grow(n);
  for (int i = 0; i < n; ++i) {
    t[i] = 1e4 * std::pow(double(i) / (n - 1), 2.0);
    grow[i] = bracket(t[i]);
  }
  AccumulationConfig acc;
  const auto a = strichartz_accumulation(t, flat, acc);
  CHECK(a.fit.exponent == doctest::Approx(0.25).epsilon(0.04));
  CHECK(a.fit.exponent <= a.reference);
  CHECK(a.cumulative.back() == doctest::Approx(3.0 * std::pow(1e4, 0.25)).epsilon(1e-6));

  acc.A = 1.0;
  const auto b = strichartz_accumulation(t, grow, acc);
  CHECK(b.reference == doctest::Approx(12.0));
  CHECK(std::abs(b.fit.exponent - 1.25) < 0.05);
  CHECK(b.fit.exponent <= b.reference);
  CHECK(b.summary().contains("reference"));

  CHECK_THROWS_AS(strichartz_accumulation(std::vector<double>{0.0}, std::vector<double>{1.0}, acc), RecordError);
  CHECK_THROWS_AS(strichartz_accumulation(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 1.0}, acc),
                  RecordError);
}

TEST_CASE("tiny data does not grow") {
  GrowthExperimentConfig c;
  c.params = EquationParams(1, 2.0);
  c.m = 32;
  c.u0.amplitude = 1e-6;
  c.T = 20.0;
  c.dt = 1e-2;
  c.sup_fractional = {0.5};
  c.modified_energy = {0};
  const GrowthResult r = growth_experiment(c);
  CHECK(std::abs(r.tracked.exponent) < 0.01);
  CHECK(r.s_tracked == doctest::Approx(2.0));
  REQUIRE(r.bound);
  CHECK(*r.bound == doctest::Approx(2.0));
  CHECK(r.energy_norm_drift < 1e-10);
  CHECK(r.record.has_column("h_2"));
  CHECK(r.record.has_column("h_1"));
  CHECK(r.record.has_column("menergy_0"));
  CHECK(r.summary()["tracked"].contains("exponent"));

  // Missing column for the accumulation check.
  AccumulationConfig acc;
  acc.gamma = 1.0;
  acc.gamma0 = 0.25;
  CHECK_THROWS_AS(strichartz_accumulation(r.record, acc), RecordError);
  acc.gamma0 = 0.5;
  CHECK(std::abs(strichartz_accumulation(r.record, acc).fit.exponent - 0.25) < 0.05);
}

TEST_CASE("growth config validation") {
  GrowthExperimentConfig c;
  c.T = 1e6;
  c.dt = 1e-3;
  CHECK_THROWS_AS(validate(c), DomainError);
  c = {};
  c.dt = 20.0;
  CHECK_THROWS_AS(validate(c), DomainError);
  c = {};
  CHECK_NOTHROW(validate(c));
}
