#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sfwm/errors.hpp"
#include "sfwm/filtering.hpp"
#include "support/oracles.hpp"

using namespace sfwm;

namespace {

constexpr double kPi = std::numbers::pi;

struct Setup {
  PumpPulse pulse;
  Waveguide wg;
  FilterPair filters;
  TemporalGrid grid;
};

Setup setup(double phi, double lambda, double mu, std::size_t n = 512, double sigma_t = 1.0) {
  Waveguide wg;
  wg.gamma = 100.0;
  wg.length = 0.01;
  const PumpPulse pulse{phi / (wg.gamma * wg.length), sigma_t};
  const FilterPair filters{FilterSpec::from_ratio(pulse, lambda), FilterSpec::from_ratio(pulse, mu)};
  double widest = sigma_t;
  for (const FilterSpec& f : {filters.signal, filters.idler}) {
    if (!f.is_delta()) widest = std::max(widest, 1.0 / f.sigma_f);
  }
  return {pulse, wg, filters, TemporalGrid(n, 16.0 * widest / static_cast<double>(n))};
}

double frobenius_rel(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm() / b.norm(); }

}  // namespace

TEST_CASE("filter spec") {
  const PumpPulse pulse{1.0, 2.0};
  const FilterSpec f = FilterSpec::from_ratio(pulse, 2.0);
  CHECK(f.sigma_f == doctest::Approx(0.125));
  CHECK(f.ratio(pulse) == doctest::Approx(2.0));
  CHECK(FilterSpec::from_ratio(pulse, 0.0).is_delta());
  CHECK(FilterSpec::unfiltered().ratio(pulse) == 0.0);
  CHECK(FilterSpec::gaussian(1.0).fwhm() == doctest::Approx(2.0 * std::sqrt(2.0 * std::log(2.0))));
  CHECK(std::isinf(FilterSpec::unfiltered().fwhm()));
  CHECK(FilterSpec::gaussian(0.0).problems("signal") ==
        std::vector<std::string>{"nonpositive filter bandwidth (signal)"});
  CHECK(FilterSpec::unfiltered().problems("idler").empty());
}

TEST_CASE("time kernel") {
  const FilterSpec f = FilterSpec::gaussian(1.0);
  CHECK(*time_kernel(f, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(*time_kernel(f, 1.0) == doctest::Approx(0.52026).epsilon(1e-5));
  CHECK(*time_kernel(f, 1.0) == doctest::Approx(std::sqrt(2.0) / std::exp(1.0)).epsilon(1e-15));
  CHECK(*time_kernel(FilterSpec::gaussian(0.3), -2.2) == *time_kernel(FilterSpec::gaussian(0.3), 2.2));
  CHECK_FALSE(time_kernel(FilterSpec::unfiltered(), 0.0).has_value());

  const TemporalGrid g(32, 0.2);
  const auto sampled = sample_time_kernel(FilterSpec::gaussian(2.0), g);
  REQUIRE(sampled.has_value());
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK((*sampled)(k) > 0.0);
    CHECK((*sampled)(k) == (*sampled)(g.size() - 1 - k));
  }
  CHECK_FALSE(sample_time_kernel(FilterSpec::unfiltered(), g).has_value());
}

TEST_CASE("filter overlap") {
  for (double s : {0.1, 0.5, 1.0, 3.0, 10.0}) {
    const FilterSpec f = FilterSpec::gaussian(s);
    CHECK(overlap(f, 0.0).value == doctest::Approx(s * std::sqrt(2 * kPi)).epsilon(1e-15));
    CHECK(overlap(f, 0.7).value == overlap(f, -0.7).value);
    CHECK(overlap(f, 200.0 / s).value == 0.0);
    CHECK_FALSE(overlap(f, 0.3).is_delta());
  }
  const FilterOverlap d = overlap(FilterSpec::unfiltered(), 0.0);
  CHECK(d.is_delta());
  CHECK(d.value == 0.0);
  CHECK(d.delta_weight == doctest::Approx(2 * std::sqrt(2.0) * kPi));
}

TEST_CASE("numeric overlap reproduces the closed form") {
  for (double s : {0.1, 0.3, 1.0, 3.0, 10.0}) {
    const FilterSpec f = FilterSpec::gaussian(s);
    const UniformGrid integration(8192, 24.0 / s / 8192);
    const auto kernel = [&](double t) { return *time_kernel(f, t); };
    for (double x : {0.0, 0.5, 1.0, 2.5}) {
      const double dT = x / s;
      CHECK(std::abs(overlap_numeric(kernel, integration, dT) - overlap(f, dT).value) <= 1e-10);
    }
  }
}

TEST_CASE("filtered linear amplitude, closed form") {
  SUBCASE("peak magnitude") {
    const Setup s = setup(1.0, 2.0, 2.0, 64);
    const TemporalGrid centered(65 - 1, 0.25, 0.125);
    const auto m = filtered_jta_linear_gaussian(s.pulse, s.wg, s.filters, centered);
    const std::size_t z = centered.index_of(0.0);
    CHECK(std::abs(m.values()(z, z)) ==
          doctest::Approx(1.0 / std::sqrt(kPi) * 0.5 / std::sqrt(40.0)).epsilon(1e-14));
  }
  SUBCASE("matches direct quadrature of the convolution") {
    for (auto [lambda, mu] : {std::pair{2.0, 2.0}, {0.5, 4.0}, {1.0, 0.5}}) {
      const Setup s = setup(0.8, lambda, mu, 64, 1.3);
      const auto m = filtered_jta_linear_gaussian(s.pulse, s.wg, s.filters, s.grid);
      for (auto [a, b] : {std::pair{32, 32}, {20, 40}, {45, 30}, {10, 12}}) {
        const auto expected =
            oracle::filtered_linear_point(0.8, 1.3, s.filters.signal.sigma_f, s.filters.idler.sigma_f,
                                          s.grid.coordinate(a), s.grid.coordinate(b));
        CHECK(std::abs(m.values()(a, b) - expected) <= 1e-12 * std::abs(m.values()(32, 32)));
      }
    }
  }
  SUBCASE("unfiltered modes are refused") {
    const Setup s = setup(1.0, 2.0, 0.0, 64);
    CHECK_THROWS_AS(filtered_jta_linear_gaussian(s.pulse, s.wg, s.filters, s.grid), ConfigError);
    const Setup none = setup(1.0, 0.0, 0.0, 64);
    CHECK_THROWS_AS(filtered_jta_linear_gaussian(none.pulse, none.wg, none.filters, none.grid), ConfigError);
  }
}

TEST_CASE("filtered amplitude by convolution") {
  SUBCASE("linear model matches the closed form") {
    for (auto [lambda, mu] : {std::pair{2.0, 2.0}, {0.5, 4.0}, {4.0, 1.0}}) {
      const Setup s = setup(1.0, lambda, mu);
      const auto conv = filtered_jta(jta_linear(s.pulse, s.wg, s.grid), s.filters);
      const auto exact = filtered_jta_linear_gaussian(s.pulse, s.wg, s.filters, s.grid);
      CHECK(frobenius_rel(conv.values(), exact.values()) <= 1e-8);
      CHECK(conv.domain() == Domain::time);
      CHECK(conv.signal_axis() == s.grid);
    }
  }
  SUBCASE("linear model phase is pi/2") {
    const Setup s = setup(1.0, 2.0, 2.0, 128);
    const auto m = filtered_jta(jta_linear(s.pulse, s.wg, s.grid), s.filters).values();
    CHECK(m.real().cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.imag().minCoeff() >= 0.0);
  }
  SUBCASE("zero pump") {
    Setup s = setup(0.0, 2.0, 2.0, 64);
    CHECK(filtered_jta(jta_linear(s.pulse, s.wg, s.grid), s.filters).values().norm() == 0.0);
  }
  SUBCASE("exchange symmetry for equal filters") {
    const Setup s = setup(1.5, 1.0, 1.0, 256);
    const ComplexMatrix m = filtered_jta(jta_simple(s.pulse, s.wg, s.grid), s.filters).values();
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-14 * m.cwiseAbs().maxCoeff());
  }
  SUBCASE("both sides unfiltered is refused") {
    const Setup s = setup(1.0, 0.0, 0.0, 64);
    CHECK_THROWS_AS(filtered_jta(jta_linear(s.pulse, s.wg, s.grid), s.filters), ConfigError);
  }
}

TEST_CASE("single-sided filtering collapses onto the diagonal") {
  const Setup s = setup(1.0, 2.0, 0.0, 128);
  const DiagonalJTA j = jta_simple(s.pulse, s.wg, s.grid);
  const ComplexMatrix m = filtered_jta(j, s.filters).values();
  const FilterSpec& f = s.filters.signal;

  SUBCASE("closed form with the delta integrated out") {
    for (std::size_t a = 0; a < 128; a += 7) {
      for (std::size_t b = 0; b < 128; b += 5) {
        const auto expected =
            j.values()(b) * *time_kernel(f, s.grid.coordinate(a) - s.grid.coordinate(b)) / std::sqrt(2 * kPi);
        CHECK(std::abs(m(a, b) - expected) <= 1e-15 * m.cwiseAbs().maxCoeff());
      }
    }
  }
  SUBCASE("a single emission time is broadened along the signal only") {
    ComplexVector spike = ComplexVector::Zero(128);
    spike(50) = 1.0;
    const DiagonalJTA one(s.grid, spike, Model::linear);
    const ComplexMatrix idler_free = filtered_jta(one, s.filters).values();
    for (Eigen::Index b = 0; b < 128; ++b) {
      if (b != 50) CHECK(idler_free.col(b).norm() == 0.0);
    }
    CHECK(idler_free.col(50).norm() > 0.0);
    const FilterPair mirrored{FilterSpec::unfiltered(), f};
    const ComplexMatrix signal_free = filtered_jta(one, mirrored).values();
    for (Eigen::Index a = 0; a < 128; ++a) {
      if (a != 50) CHECK(signal_free.row(a).norm() == 0.0);
    }
  }
}

TEST_CASE("Gaussian series expansion") {
  SUBCASE("a single term is the linear closed form") {
    const Setup s = setup(0.1, 2.0, 2.0, 128);
    const auto series = filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid, 0.9);
    CHECK(series.terms == 1);
    const auto exact = filtered_jta_linear_gaussian(s.pulse, s.wg, s.filters, s.grid);
    CHECK(frobenius_rel(series.matrix.values(), exact.values()) <= 1e-15);
  }
  SUBCASE("term count follows the factorial bound") {
    const Setup s = setup(2.0, 2.0, 2.0, 64);
    const auto series = filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid, 1e-12);
    int first = 0;
    while (first * std::log(6.0) - std::lgamma(first + 1.0) >= std::log(1e-12)) ++first;
    CHECK(series.terms == first);
    CHECK(series.terms >= 33);
    CHECK(series.terms <= 36);
    CHECK(series.residual_bound < 1e-10);
  }
  SUBCASE("zero phase") {
    const Setup s = setup(0.0, 2.0, 2.0, 64);
    const auto series = filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid);
    CHECK(series.terms == 1);
    CHECK(series.matrix.values().norm() == 0.0);
    CHECK(series.residual_bound == 0.0);
  }
  SUBCASE("agrees with the convolution of the simple model") {
    const Setup s = setup(1.0, 2.0, 2.0);
    const auto series = filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid);
    const auto conv = filtered_jta(jta_simple(s.pulse, s.wg, s.grid), s.filters);
    CHECK(frobenius_rel(series.matrix.values(), conv.values()) <= 1e-6);
  }
  SUBCASE("agreement holds across phases and filter ratios on the default grid") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> phi(0.0, 2.0);
    std::uniform_real_distribution<double> ratio(0.5, 4.0);
    for (int trial = 0; trial < 6; ++trial) {
      const double p = phi(rng);
      const double l = ratio(rng);
      const double m = ratio(rng);
      CAPTURE(p);
      CAPTURE(l);
      CAPTURE(m);
      const Setup s = setup(p, l, m);
      const auto series = filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid);
      const auto conv = filtered_jta(jta_simple(s.pulse, s.wg, s.grid), s.filters);
      CHECK(frobenius_rel(series.matrix.values(), conv.values()) <= 1e-6);
    }
    for (auto [p, l, m] : {std::tuple{2.0, 4.0, 4.0}, {2.0, 0.5, 0.5}, {2.0, 4.0, 0.5}}) {
      const Setup s = setup(p, l, m);
      const auto series = filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid);
      const auto conv = filtered_jta(jta_simple(s.pulse, s.wg, s.grid), s.filters);
      CHECK(frobenius_rel(series.matrix.values(), conv.values()) <= 1e-6);
    }
  }
  SUBCASE("bad inputs") {
    Setup s = setup(1.0, 2.0, 2.0, 64);
    CHECK_THROWS_AS(filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid, 0.0), ConfigError);
    CHECK_THROWS_AS(filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid, -1.0), ConfigError);
    s.wg.alpha = 1.0;
    CHECK_THROWS_AS(filtered_jta_gaussian_series(s.pulse, s.wg, s.filters, s.grid), ModelMismatchError);
  }
}
