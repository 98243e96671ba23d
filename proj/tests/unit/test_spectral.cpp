#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fnls/error.hpp"
#include "fnls/spectral.hpp"
#include "oracles.hpp"

using namespace fnls;
using std::numbers::pi;
using cplx = std::complex<double>;

TEST_CASE("grid shape and nodes") {
  const TorusGrid g(2, 16);
  CHECK(g.size() == 256);
  CHECK(g.spacing() == doctest::Approx(2 * pi / 16));
  const auto i = g.flat({3, 5, 0});
  CHECK(g.node(i, 0) == doctest::Approx(2 * pi * 3 / 16));
  CHECK(g.node(i, 1) == doctest::Approx(2 * pi * 5 / 16));
  CHECK(g.mode(g.mode_index({-8, 7, 0})) == std::array<int, 3>{-8, 7, 0});
  CHECK_THROWS_AS(TorusGrid(1, 6), DimensionError);
  CHECK_THROWS_AS(TorusGrid(1, 2), DimensionError);
  CHECK_THROWS_AS(TorusGrid(4, 8), DimensionError);
  CHECK_THROWS_AS(g.mode_index({8, 0, 0}), ResolutionError);
}

TEST_CASE("analyze of a single exponential and of a constant") {
  const TorusGrid g(2, 16);
  Eigen::ArrayXcd s(g.size());
  for (Eigen::Index i = 0; i < g.size(); ++i) s(i) = std::polar(1.0, g.node(i, 0));
  SpectralField f = analyze(s, g);
  CHECK(std::abs(f.at({1, 0, 0}) - 1.0) < 1e-14);
  f.at({1, 0, 0}) = 0.0;
  CHECK(f.coeff().abs().maxCoeff() < 1e-14);

  SpectralField one = analyze(Eigen::ArrayXcd::Ones(g.size()), g);
  CHECK(std::abs(one.at({0, 0, 0}) - 1.0) < 1e-15);
  one.at({0, 0, 0}) = 0.0;
  CHECK(one.coeff().abs().maxCoeff() < 1e-15);

  CHECK_THROWS_AS(analyze(Eigen::ArrayXcd::Ones(10), g), DimensionError);
}

TEST_CASE("synthesize of basic fields") {
  const TorusGrid g(2, 16);
  CHECK((synthesize(SpectralField::mode(g, {0, 0, 0})) - 1.0).abs().maxCoeff() < 1e-15);
  const Eigen::ArrayXcd e = synthesize(SpectralField::mode(g, {1, 0, 0}));
  for (Eigen::Index i = 0; i < g.size(); ++i) CHECK(std::abs(e(i) - std::polar(1.0, g.node(i, 0))) < 1e-14);
}

TEST_CASE("transforms agree with direct sums") {
  for (auto [d, m] : {std::pair{1, 16}, {2, 8}, {3, 4}}) {
    const TorusGrid g(d, m);
    const SpectralField f = oracle::random_field(g, m / 2, 11 + d);
    CHECK((synthesize(f) - oracle::direct_synthesize(f)).abs().maxCoeff() < 1e-12);
    const Eigen::ArrayXcd s = oracle::random_samples(g, 5 + d);
    CHECK(max_abs_difference(analyze(s, g), oracle::direct_analyze(s, g)) < 1e-13);
  }
}

TEST_CASE("round trips on the test matrix") {
  for (int d = 1; d <= 3; ++d) {
    for (int m : {4, 8, 32}) {
      const TorusGrid g(d, m);
      const Eigen::ArrayXcd s = oracle::random_samples(g, 100 * d + m);
      const Eigen::ArrayXcd back = synthesize(analyze(s, g));
      CHECK((back - s).abs().maxCoeff() / s.abs().maxCoeff() < 1e-12);
      const SpectralField f = oracle::random_field(g, m / 2, 7 * d + m);
      CHECK(max_abs_difference(analyze(synthesize(f), g), f) / f.coeff().abs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("synthesize is linear") {
  const TorusGrid g(2, 16);
  const SpectralField f = oracle::random_field(g, 8, 1), h = oracle::random_field(g, 8, 2);
  const cplx a(0.3, -1.2), b(2.0, 0.5);
  const Eigen::ArrayXcd lhs = synthesize(a * f + b * h);
  const Eigen::ArrayXcd rhs = a * synthesize(f) + b * synthesize(h);
  CHECK((lhs - rhs).abs().maxCoeff() < 1e-12);
}

TEST_CASE("transforms are bit-reproducible") {
  const TorusGrid g(2, 32);
  const SpectralField f = oracle::random_field(g, 16, 3);
  const Eigen::ArrayXcd a = synthesize(f), b = synthesize(f);
  CHECK((a == b).all());
}

TEST_CASE("fractional power on modes and constants") {
  const TorusGrid g(2, 16);
  const SpectralField e = SpectralField::mode(g, {3, -4, 0});
  const SpectralField r = apply_fractional_power(e, 1.5);
  CHECK(std::abs(r.at({3, -4, 0}) - std::pow(5.0, 1.5)) < 1e-12);
  CHECK(squared_l2(apply_fractional_power(SpectralField::mode(g, {0, 0, 0}, 2.0), 1.0)) == 0.0);
  CHECK(max_abs_difference(apply_fractional_power(e, 0.0), e) == 0.0);
  CHECK_THROWS_AS(apply_fractional_power(SpectralField::mode(g, {0, 0, 0}), -0.5), SingularMultiplierError);
  CHECK_NOTHROW(apply_fractional_power(e, -0.5));
}

TEST_CASE("s = 2 is minus the Laplacian") {
  const TorusGrid g(2, 16);
  const SpectralField f = oracle::random_field(g, 7, 9);
  const SpectralField lap = apply_derivative(f, {2, 0}) + apply_derivative(f, {0, 2});
  CHECK(max_abs_difference(apply_fractional_power(f, 2.0), -1.0 * lap) < 1e-12);
}

TEST_CASE("fractional powers compose on mean-zero fields") {
  const TorusGrid g(2, 16);
  SpectralField f = oracle::random_field(g, 8, 4);
  f.at({0, 0, 0}) = 0.0;
  for (auto [s, t] : {std::pair{0.5, 1.25}, {-0.75, 2.0}, {1.5, -1.5}}) {
    const SpectralField lhs = apply_fractional_power(apply_fractional_power(f, t), s);
    const SpectralField rhs = apply_fractional_power(f, s + t);
    CHECK(max_abs_difference(lhs, rhs) < 1e-12 * std::max(1.0, rhs.coeff().abs().maxCoeff()));
  }
}

TEST_CASE("fractional power matches the sparse mode oracle") {
  const TorusGrid g(2, 16);
  const SpectralField f = oracle::random_field(g, 5, 21);
  const auto m = oracle::from_field(f);
  CHECK(m.power(1.3).distance(apply_fractional_power(f, 1.3)) < 1e-12);
}

TEST_CASE("symbol derivatives") {
  const TorusGrid g1(1, 16);
  const SpectralField f = oracle::random_field(g1, 7, 2);
  CHECK(max_abs_difference(apply_symbol_derivative(f, 1.7, {0}), apply_fractional_power(f, 1.7)) < 1e-15);

  // d/dxi |xi|^2 = 2 xi, times i^{-1}.
  const SpectralField d1 = apply_symbol_derivative(f, 2.0, {1});
  for (int k = -7; k <= 7; ++k) CHECK(std::abs(d1.at({k, 0, 0}) - cplx(0, -2.0 * k) * f.at({k, 0, 0})) < 1e-12);

  const TorusGrid g2(2, 16);
  const SpectralField c = SpectralField::mode(g2, {0, 0, 0}, 3.0);
  CHECK(squared_l2(apply_symbol_derivative(c, 3.0, {1, 1})) == 0.0);
  CHECK(squared_l2(apply_symbol_derivative(c, 2.5, {1, 0})) == 0.0);
  CHECK_THROWS_AS(apply_symbol_derivative(c, 3.0, {2, 1}), UnsupportedOrderError);
  CHECK_THROWS_AS(apply_symbol_derivative(c, 3.0, {1}), DimensionError);

  // Second derivatives of |xi|^s: s(s-2)|xi|^{s-4} xi_a xi_b + s|xi|^{s-2} delta_ab, times i^{-2}.
  const SpectralField e = SpectralField::mode(g2, {3, 1, 0});
  const double s = 2.5, r2 = 10.0;
  const double dxx = s * (s - 2) * std::pow(r2, s / 2 - 2) * 9 + s * std::pow(r2, s / 2 - 1);
  const double dxy = s * (s - 2) * std::pow(r2, s / 2 - 2) * 3;
  CHECK(std::abs(apply_symbol_derivative(e, s, {2, 0}).at({3, 1, 0}) + dxx) < 1e-12);
  CHECK(std::abs(apply_symbol_derivative(e, s, {1, 1}).at({3, 1, 0}) + dxy) < 1e-12);
}

TEST_CASE("odd symbols drop the Nyquist row") {
  const TorusGrid g(1, 8);
  const SpectralField ny = SpectralField::mode(g, {-4, 0, 0});
  CHECK(squared_l2(apply_derivative(ny, {1})) == 0.0);
  CHECK(squared_l2(apply_symbol_derivative(ny, 2.0, {1})) == 0.0);
  CHECK(std::abs(apply_derivative(ny, {2}).at({-4, 0, 0}) + 16.0) < 1e-12);
}

TEST_CASE("sobolev norms") {
  const TorusGrid g(2, 16);
  const SpectralField e = SpectralField::mode(g, {2, 1, 0});
  CHECK(sobolev_norm(e, 1.5) == doctest::Approx(2 * pi * std::pow(6.0, 0.75)).epsilon(1e-14));

  for (unsigned seed = 1; seed <= 5; ++seed) {
    const SpectralField f = oracle::random_field(g, 7, seed);
    const double l2 = lebesgue_norm(synthesize(f), g, 2.0);
    CHECK(std::abs(sobolev_norm(f, 0.0) - l2) / l2 < 1e-12);
    double prev = 0.0;
    for (double s : {-1.0, 0.0, 0.5, 1.0, 2.5}) {
      const double v = sobolev_norm(f, s);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("lebesgue norms") {
  const TorusGrid g(1, 32);
  const Eigen::ArrayXcd c = Eigen::ArrayXcd::Constant(g.size(), cplx(0.6, 0.8));
  for (double p : {1.0, 2.0, 3.5}) CHECK(lebesgue_norm(c, g, p) == doctest::Approx(std::pow(2 * pi, 1 / p)));
  CHECK(lebesgue_norm(c, g, kInfinity) == doctest::Approx(1.0));
  CHECK(lebesgue_norm(synthesize(SpectralField::mode(g, {3, 0, 0})), g, kInfinity) == doctest::Approx(1.0));
  const Eigen::ArrayXcd cosine = synthesize(SpectralField::mode(g, {1, 0, 0}) + SpectralField::mode(g, {-1, 0, 0}));
  CHECK(std::pow(lebesgue_norm(cosine, g, 4.0), 4) == doctest::Approx(12 * pi).epsilon(1e-13));
  CHECK_THROWS_AS(lebesgue_norm(c, g, 0.5), DomainError);
}

TEST_CASE("padding and truncation") {
  const TorusGrid g(2, 8);
  const SpectralField f = oracle::random_field(g, 3, 8);
  CHECK(product_padding(1) == 2);
  CHECK(product_padding(2) == 4);
  CHECK(product_padding(3) == 4);
  const SpectralField p = zero_pad(f, 2);
  CHECK(p.grid().points() == 16);
  CHECK(max_abs_difference(truncate(p, g), f) == 0.0);
  CHECK(squared_l2(p) == doctest::Approx(squared_l2(f)).epsilon(1e-15));

  // Padded products of band-limited fields are exact.
  const auto pf = synthesize(p);
  const SpectralField sq = analyze(pf * pf, p.grid());
  const auto m = oracle::from_field(f);
  CHECK((m * m).distance(sq) < 1e-12);
}

TEST_CASE("field helpers") {
  const TorusGrid g(1, 16);
  const SpectralField f = oracle::random_field(g, 6, 30);
  const Eigen::ArrayXcd c = synthesize(conjugate(f));
  CHECK((c - synthesize(f).conjugate()).abs().maxCoeff() < 1e-13);
  const Eigen::ArrayXcd s = synthesize(translate(f, {3, 0, 0}));
  const Eigen::ArrayXcd base = synthesize(f);
  for (int j = 0; j < 16; ++j) CHECK(std::abs(s((j + 3) % 16) - base(j)) < 1e-13);
  CHECK(inner_product(f, f).real() == doctest::Approx(squared_l2(f)));
}
