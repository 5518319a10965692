#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "sfwm/errors.hpp"
#include "sfwm/pump.hpp"
#include "support/oracles.hpp"

using namespace sfwm;

TEST_CASE("pump power profile") {
  const PumpPulse pulse{1.0, 1.3};
  CHECK(pump_power_profile(pulse, 0.0) == 1.0);
  CHECK(pump_power_profile(pulse, 1.3) == doctest::Approx(0.60653).epsilon(1e-5));
  CHECK(pump_power_profile(pulse, -0.4) == pump_power_profile(pulse, 0.4));
  CHECK(pump_power_profile({0.0, 1.0}, 0.7) == 0.0);
  CHECK(pulse.sigma_omega() == doctest::Approx(1.0 / 2.6));
}

TEST_CASE("pulse and guide validity") {
  CHECK(PumpPulse{-1.0, 1.0}.problems().size() == 1);
  CHECK(PumpPulse{1.0, 0.0}.problems().size() == 1);
  CHECK(PumpPulse{0.0, 1.0}.problems().empty());
  Waveguide wg;
  wg.length = 0.0;
  wg.alpha2 = -1.0;
  CHECK(wg.problems().size() == 2);
}

TEST_CASE("effective length") {
  CHECK(effective_length(0.0, 3e-3) == 3e-3);
  const double alpha = 40.0;
  CHECK(effective_length(alpha, std::log(2.0) / alpha) == doctest::Approx(0.5 / alpha).epsilon(1e-14));
  CHECK(effective_length(alpha, std::numeric_limits<double>::infinity()) == doctest::Approx(1.0 / alpha));
  CHECK(effective_length(1e-12, 2.0) == doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("propagated power") {
  const PumpPulse pulse{2.0, 1.0};
  Waveguide wg;
  wg.length = 1.0;

  SUBCASE("lossless guide leaves the pulse unchanged") {
    for (double tau : {0.0, 0.5, 2.0}) CHECK(propagate_power(pulse, wg, 0.7, tau) == pump_power_profile(pulse, tau));
  }
  SUBCASE("two-photon absorption halves the peak at alpha2 P0 z = 1") {
    wg.alpha2 = 0.5;
    CHECK(propagate_power(pulse, wg, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("linear loss halves the power at alpha z = ln 2") {
    wg.alpha = std::log(2.0);
    CHECK(propagate_power(pulse, wg, 1.0, 0.3) == doctest::Approx(pump_power_profile(pulse, 0.3) / 2));
  }
  SUBCASE("both denominators agree without linear loss") {
    wg.alpha2 = 0.8;
    CHECK(propagate_power(pulse, wg, 0.6, 0.1, TpaDenominator::as_printed) ==
          propagate_power(pulse, wg, 0.6, 0.1, TpaDenominator::effective_length));
  }
  SUBCASE("the denominators differ with linear loss") {
    wg.alpha = 3.0;
    wg.alpha2 = 0.8;
    CHECK(propagate_power(pulse, wg, 0.6, 0.0, TpaDenominator::as_printed) <
          propagate_power(pulse, wg, 0.6, 0.0, TpaDenominator::effective_length));
  }
  SUBCASE("never above the linearly attenuated input") {
    wg.alpha = 2.0;
    for (double a2 : {0.0, 0.1, 1.0, 10.0}) {
      wg.alpha2 = a2;
      for (double z : {0.0, 0.3, 1.0}) {
        for (double tau : {0.0, 1.0, 3.0}) {
          const double bound = pump_power_profile(pulse, tau) * std::exp(-wg.alpha * z);
          const double p = propagate_power(pulse, wg, z, tau);
          CHECK(p <= bound);
          if (a2 == 0.0 || z == 0.0) CHECK(p == doctest::Approx(bound).epsilon(1e-15));
          else CHECK(p < bound);
        }
      }
    }
  }
}

TEST_CASE("power and phase against an ODE integration") {
  const PumpPulse pulse{1.5, 1.0};
  Waveguide wg;
  wg.gamma = 2.0;
  wg.length = 1.0;
  for (auto [alpha, alpha2] : {std::pair{0.0, 0.0}, {0.0, 1.0}, {1.5, 0.0}, {1.5, 0.7}, {4.0, 3.0}}) {
    wg.alpha = alpha;
    wg.alpha2 = alpha2;
    for (double tau : {0.0, 0.8}) {
      const auto s = oracle::integrate_pump(pump_power_profile(pulse, tau), wg.gamma, alpha, alpha2, 0.0, 1.0, 4000);
      CHECK(propagate_power(pulse, wg, 1.0, tau) == doctest::Approx(s.power).epsilon(1e-10));
      CHECK(nonlinear_phase(pulse, wg, 1.0, tau) == doctest::Approx(s.phase).epsilon(1e-10));
    }
  }
}

TEST_CASE("nonlinear phase") {
  Waveguide wg;
  wg.gamma = 1.0;
  wg.length = 1.0;
  const PumpPulse pulse{1.0, 1.0};

  CHECK(nonlinear_phase(pulse, wg, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  wg.alpha2 = 1.0;
  CHECK(nonlinear_phase(pulse, wg, 1.0, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(nonlinear_phase({0.0, 1.0}, wg, 1.0, 0.0) == 0.0);

  SUBCASE("continuous as alpha2 vanishes") {
    wg.alpha = 0.5;
    const double zeff = effective_length(wg.alpha, 1.0);
    wg.alpha2 = 1e-6 / zeff;
    const double limit = wg.gamma * zeff;
    CHECK(std::abs(nonlinear_phase(pulse, wg, 1.0, 0.0) - limit) / limit <= 1e-6);
    for (double x : {1e-7, 1e-8, 1e-9, 1e-12}) {
      wg.alpha2 = x / zeff;
      CHECK(std::abs(nonlinear_phase(pulse, wg, 1.0, 0.0) - limit) / limit <= x);
    }
  }
  SUBCASE("nondecreasing in z and in peak power") {
    wg.alpha = 0.8;
    double previous = -1.0;
    for (double z = 0.0; z <= 1.0; z += 0.05) {
      const double th = nonlinear_phase(pulse, wg, z, 0.2);
      CHECK(th >= previous);
      previous = th;
    }
    previous = -1.0;
    for (double p = 0.0; p <= 5.0; p += 0.25) {
      const double th = nonlinear_phase({p, 1.0}, wg, 1.0, 0.2);
      CHECK(th >= previous);
      previous = th;
    }
  }
}

TEST_CASE("nonlinear parameter") {
  const Material si{6e-18, 1550e-9, 0.2e-12};
  CHECK(nonlinear_parameter(si) == doctest::Approx(121.6).epsilon(5e-4));
  CHECK(nonlinear_parameter({0.0, 1550e-9, 0.2e-12}) == 0.0);
  const Material wide{6e-18, 1550e-9, 0.4e-12};
  CHECK(nonlinear_parameter(wide) == doctest::Approx(nonlinear_parameter(si) / 2).epsilon(1e-15));
}

TEST_CASE("effective area") {
  SUBCASE("uniform field") {
    ModeProfile m;
    m.amplitude = Eigen::MatrixXd::Constant(10, 20, 3.0);
    m.core = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(10, 20, true);
    m.dx = 0.1e-6;
    m.dy = 0.05e-6;
    CHECK(effective_area(m) == doctest::Approx(10 * 20 * 0.1e-6 * 0.05e-6).epsilon(1e-14));
  }
  SUBCASE("Gaussian mode") {
    const double w = 0.4e-6;
    const int n = 401;
    const double h = 12.0 * w / (n - 1);
    ModeProfile m;
    m.amplitude.resize(n, n);
    m.core = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, true);
    m.dx = m.dy = h;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double x = -6 * w + i * h;
        const double y = -6 * w + j * h;
        m.amplitude(i, j) = std::exp(-(x * x + y * y) / (w * w));
      }
    }
    CHECK(effective_area(m) == doctest::Approx(std::numbers::pi * w * w).epsilon(1e-8));
    ModeProfile scaled = m;
    scaled.amplitude *= 2.0;
    CHECK(effective_area(scaled) == doctest::Approx(effective_area(m)).epsilon(1e-15));
    scaled.amplitude *= -1e-7;
    CHECK(effective_area(scaled) == doctest::Approx(effective_area(m)).epsilon(1e-15));
  }
  SUBCASE("cladding samples count in the numerator only") {
    ModeProfile m;
    m.amplitude = Eigen::MatrixXd::Constant(2, 2, 1.0);
    m.core = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(2, 2, true);
    m.core(0, 0) = false;
    CHECK(effective_area(m) == doctest::Approx(16.0 / 3.0));
  }
  SUBCASE("degenerate profiles") {
    ModeProfile m;
    m.amplitude = Eigen::MatrixXd::Zero(4, 4);
    m.core = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(4, 4, true);
    CHECK_THROWS_AS(effective_area(m), DegenerateInputError);
    m.amplitude.setOnes();
    m.core.setConstant(false);
    CHECK_THROWS_AS(effective_area(m), DegenerateInputError);
  }
}

TEST_CASE("free-carrier regime check") {
  const auto ok = check_free_carrier_regime(1.28e-19, 1e-21, 1e-12, 1e12);
  CHECK(ok.ratio == doctest::Approx(128.0).epsilon(1e-12));
  CHECK(ok.pass);
  const auto dark = check_free_carrier_regime(1.28e-19, 1e-21, 1e-12, 0.0);
  CHECK(std::isinf(dark.ratio));
  CHECK(dark.pass);
  const auto bad = check_free_carrier_regime(1.28e-19, 1e-21, 1e-12, 1.28e14 / 5.0);
  CHECK(bad.ratio == doctest::Approx(5.0));
  CHECK_FALSE(bad.pass);
  CHECK(check_free_carrier_regime(1.28e-19, 1e-21, 1e-12, 1.28e13).pass);
  CHECK_FALSE(check_free_carrier_regime(1.28e-19, 1e-21, 1e-12, 1.28e13 * (1 + 1e-12)).pass);
  CHECK_FALSE(check_free_carrier_regime(1.28e-19, 1e-21, 1e-12, 1.28e14 / 50.0, 100.0).pass);
}

TEST_CASE("peak nonlinear phase") {
  Waveguide wg;
  wg.gamma = 121.6;
  wg.length = 3e-3;
  CHECK(phi_max({1.0, 1.0}, wg) == doctest::Approx(0.3648).epsilon(1e-12));
  CHECK(phi_max({0.0, 1.0}, wg) == 0.0);
  CHECK(phi_max({2.0, 1.0}, wg) == doctest::Approx(2 * 0.3648));
  wg.length = 6e-3;
  CHECK(phi_max({1.0, 1.0}, wg) == doctest::Approx(2 * 0.3648));
}
