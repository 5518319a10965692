#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "sfwm/config.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/grid.hpp"
#include "sfwm/quadrature.hpp"

using namespace sfwm;

namespace {

SimulationConfig baseline() {
  SimulationConfig cfg;
  cfg.pump = {1.0, 1.0};
  cfg.waveguide.gamma = 100.0;
  cfg.waveguide.length = 0.01;
  cfg.filters = {FilterSpec::gaussian(0.25), FilterSpec::gaussian(0.25)};
  cfg.model = Model::simple_sxpm;
  return cfg;
}

}  // namespace

TEST_CASE("temporal grid sizing") {
  const PumpPulse pulse{1.0, 1.0};

  SUBCASE("pump alone sets the width") {
    const TemporalGrid g = build_temporal_grid(pulse, {}, 8.0, 256);
    CHECK(g.dt() == doctest::Approx(0.0625).epsilon(1e-15));
    CHECK(g.size() == 256);
  }
  SUBCASE("a narrow filter widens the grid") {
    const std::array<FilterSpec, 1> f{FilterSpec::gaussian(0.5)};
    const TemporalGrid g = build_temporal_grid(pulse, f, 8.0, 256);
    CHECK(g.dt() == doctest::Approx(0.125).epsilon(1e-15));
  }
  SUBCASE("unfiltered modes do not count") {
    const std::array<FilterSpec, 2> f{FilterSpec::unfiltered(), FilterSpec::gaussian(4.0)};
    CHECK(build_temporal_grid(pulse, f, 8.0, 256).dt() == doctest::Approx(0.0625));
  }
  SUBCASE("covers the requested span") {
    const TemporalGrid g = build_temporal_grid(pulse, {}, 8.0, 512);
    CHECK(g.last() - g.first() == doctest::Approx(16.0 - g.dt()));
    CHECK(g.first() == doctest::Approx(-g.last()));
  }
  SUBCASE("bad sizes") {
    CHECK_THROWS_AS(build_temporal_grid(pulse, {}, 8.0, 100), ConfigError);
    CHECK_THROWS_AS(build_temporal_grid(pulse, {}, 8.0, 32), ConfigError);
    CHECK_THROWS_AS(build_temporal_grid(pulse, {}, 5.0, 256), ConfigError);
  }
}

TEST_CASE("grid index round trip") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> center(-50.0, 50.0);
  std::uniform_real_distribution<double> step(1e-3, 2.0);
  for (std::size_t n : {8u, 64u, 512u, 4096u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const TemporalGrid g(n, step(rng), center(rng));
      for (std::size_t i = 0; i < n; ++i) REQUIRE(g.index_of(g.coordinate(i)) == i);
    }
  }
}

TEST_CASE("grid symmetry about its center") {
  const TemporalGrid g(64, 0.3, 2.5);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.coordinate(i) + g.coordinate(g.size() - 1 - i) == doctest::Approx(5.0).epsilon(1e-14));
  }
}

TEST_CASE("temporal grid invariants") {
  CHECK_NOTHROW(TemporalGrid(8, 0.1));
  CHECK_THROWS_AS(TemporalGrid(12, 0.1), ConfigError);
  CHECK_THROWS_AS(TemporalGrid(4, 0.1), ConfigError);
  CHECK_THROWS_AS(TemporalGrid(64, 0.0), ConfigError);
  CHECK_THROWS_AS(TemporalGrid(64, -1.0), ConfigError);
}

TEST_CASE("spectral grid is conjugate") {
  const TemporalGrid t(256, 0.07);
  const SpectralGrid w(t);
  CHECK(t.size() * t.dt() * w.d_omega() == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
  CHECK(w.size() == t.size());
  CHECK(w.center() == 0.0);
}

TEST_CASE("trapezoid weights") {
  const UniformGrid g(5, 0.5);
  const RealVector w = g.trapezoid_weights();
  CHECK(w(0) == 0.25);
  CHECK(w(2) == 0.5);
  CHECK(w(4) == 0.25);
}

TEST_CASE("non-finite matrices are rejected") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  CHECK_NOTHROW(require_finite(m, "m"));
  m(1, 2) = {std::nan(""), 0.0};
  CHECK_THROWS_AS(require_finite(m, "m"), DegenerateInputError);
}

TEST_CASE("config validation") {
  SUBCASE("baseline is valid") { CHECK(config_problems(baseline()).empty()); }

  SUBCASE("nonpositive length") {
    auto cfg = baseline();
    cfg.waveguide.length = -1.0;
    const auto p = config_problems(cfg);
    CHECK(std::find(p.begin(), p.end(), "nonpositive length") != p.end());
  }
  SUBCASE("lossless simple model") {
    auto cfg = baseline();
    cfg.waveguide.alpha = 0.0;
    cfg.waveguide.alpha2 = 0.0;
    CHECK_NOTHROW(validate_config(cfg));
  }
  SUBCASE("lossy guide needs the general model") {
    auto cfg = baseline();
    cfg.waveguide.alpha = 100.0;
    const auto p = config_problems(cfg);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == "lossy medium requires general_quadrature");
    cfg.model = Model::general_quadrature;
    CHECK(config_problems(cfg).empty());
  }
  SUBCASE("every problem is reported, sorted") {
    auto cfg = baseline();
    cfg.waveguide.length = 0.0;
    cfg.waveguide.alpha2 = -1.0;
    cfg.pump.sigma_t = 0.0;
    const auto p = config_problems(cfg);
    CHECK(p.size() == 4);
    CHECK(std::is_sorted(p.begin(), p.end()));
    try {
      validate_config(cfg);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.problems() == p);
    }
  }
  SUBCASE("idempotent") {
    auto cfg = baseline();
    cfg.filters = {FilterSpec::unfiltered(), FilterSpec::unfiltered()};
    cfg.grid.n_points = 100;
    CHECK(config_problems(cfg) == config_problems(cfg));
    const auto valid = validate_config(baseline());
    CHECK(config_problems(valid).empty());
  }
  SUBCASE("unfiltered on both sides") {
    auto cfg = baseline();
    cfg.filters = {FilterSpec::unfiltered(), FilterSpec::unfiltered()};
    CHECK(config_problems(cfg) == std::vector<std::string>{"at least one filter must be gaussian"});
  }
}

TEST_CASE("Gauss-Legendre rule") {
  SUBCASE("three-point nodes") {
    const auto r = gauss_legendre(3);
    CHECK(r.nodes[0] == doctest::Approx(-std::sqrt(0.6)).epsilon(1e-15));
    CHECK(r.nodes[1] == doctest::Approx(0.0));
    CHECK(r.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
  }
  SUBCASE("exact for polynomials up to degree 2n-1") {
    for (int n : {1, 2, 5, 16, 64}) {
      const auto r = gauss_legendre(n);
      for (int degree = 0; degree <= 2 * n - 1 && degree <= 40; ++degree) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) sum += r.weights[k] * std::pow(r.nodes[k], degree);
        const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
        CHECK(sum == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
      }
    }
  }
  SUBCASE("high order stays accurate") {
    const auto r = gauss_legendre(2048);
    double sum = 0.0;
    for (std::size_t k = 0; k < r.nodes.size(); ++k) sum += r.weights[k] * std::cos(r.nodes[k]);
    CHECK(sum == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-13));
  }
}
