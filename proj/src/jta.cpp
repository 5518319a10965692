#include "sfwm/jta.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "sfwm/errors.hpp"
#include "sfwm/quadrature.hpp"

namespace sfwm {

namespace {

using namespace std::complex_literals;

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

template <typename F>
DiagonalJTA tabulate(const TemporalGrid& grid, Model model, F&& amplitude) {
  ComplexVector values(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values(static_cast<Eigen::Index>(i)) = amplitude(grid.coordinate(i));
  }
  return DiagonalJTA(grid, std::move(values), model);
}

void require_lossless(const Waveguide& wg, Model model) {
  if (!wg.lossless()) {
    throw ModelMismatchError("model " + std::string(to_string(model)) +
                             " assumes a lossless guide; use general_quadrature");
  }
}

ComplexVector integrate_z(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid,
                          const GaussLegendreRule& rule, TpaDenominator denominator) {
  const double half = 0.5 * wg.length;
  ComplexVector out(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double tau = grid.coordinate(i);
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double z = half * (rule.nodes[k] + 1.0);
      const double power = propagate_power(pulse, wg, z, tau, denominator);
      const double phase = wg.delta_beta0 * z - 2.0 * nonlinear_phase(pulse, wg, z, tau);
      acc += rule.weights[k] * power * std::polar(1.0, phase);
    }
    acc *= half;
    const double exit_phase = 4.0 * nonlinear_phase(pulse, wg, wg.length, tau);
    out(static_cast<Eigen::Index>(i)) = 1i * wg.gamma * std::polar(1.0, exit_phase) * acc;
  }
  return out;
}

}  // namespace

std::string_view to_string(Model model) noexcept {
  switch (model) {
    case Model::linear:
      return "linear";
    case Model::sinc:
      return "sinc";
    case Model::simple_sxpm:
      return "simple_sxpm";
    case Model::general_quadrature:
      return "general_quadrature";
  }
  return "unknown";
}

Model parse_model(std::string_view name) {
  for (Model m : {Model::linear, Model::sinc, Model::simple_sxpm, Model::general_quadrature}) {
    if (name == to_string(m)) return m;
  }
  throw ConfigError("unknown model '" + std::string(name) + "'");
}

DiagonalJTA::DiagonalJTA(TemporalGrid grid, ComplexVector values, Model model)
    : grid_(std::move(grid)), values_(std::move(values)), model_(model) {
  if (static_cast<std::size_t>(values_.size()) != grid_.size()) {
    throw ConfigError("JTA sample count does not match its grid");
  }
  require_finite(values_, "diagonal JTA");
}

DiagonalJTA jta_linear(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid) {
  return tabulate(grid, Model::linear, [&](double tau) -> std::complex<double> {
    return 1i * (wg.gamma * pump_power_profile(pulse, tau) * wg.length);
  });
}

DiagonalJTA jta_simple(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid) {
  require_lossless(wg, Model::simple_sxpm);
  return tabulate(grid, Model::simple_sxpm, [&](double tau) -> std::complex<double> {
    const double phi = wg.gamma * pump_power_profile(pulse, tau) * wg.length;
    return 1i * phi * std::polar(1.0, 3.0 * phi);
  });
}

DiagonalJTA jta_sinc(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid) {
  require_lossless(wg, Model::sinc);
  const double mismatch = wg.delta_beta0 * wg.length;
  return tabulate(grid, Model::sinc, [&](double tau) -> std::complex<double> {
    const double power = pump_power_profile(pulse, tau);
    const double phi = wg.gamma * power * wg.length;
    const double shift = (wg.delta_beta0 - 2.0 * wg.gamma * power) * wg.length / 2.0;
    return 1i * phi * std::polar(1.0, 3.0 * phi + mismatch / 2.0) * sinc(shift);
  });
}

DiagonalJTA jta_general(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid,
                        const GeneralQuadratureOptions& options) {
  if (options.order < 8) throw ConfigError("quadrature order below 8");
  const ComplexVector coarse = integrate_z(pulse, wg, grid, gauss_legendre(options.order), options.denominator);
  ComplexVector fine = integrate_z(pulse, wg, grid, gauss_legendre(2 * options.order), options.denominator);

  const double peak = fine.cwiseAbs().maxCoeff();
  if (peak > 0.0) {
    Eigen::Index worst = 0;
    const double change = (fine - coarse).cwiseAbs().maxCoeff(&worst) / peak;
    if (change > options.tolerance) {
      throw AccuracyError("z-quadrature did not converge (relative change " + std::to_string(change) + ")",
                          std::abs(coarse(worst)), std::abs(fine(worst)));
    }
  }
  return DiagonalJTA(grid, std::move(fine), Model::general_quadrature);
}

DiagonalJTA with_phase(const DiagonalJTA& jta, const std::function<double(double)>& phase) {
  ComplexVector values = jta.values();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    values(i) *= std::polar(1.0, phase(jta.grid().coordinate(static_cast<std::size_t>(i))));
  }
  return DiagonalJTA(jta.grid(), std::move(values), jta.model());
}

DiagonalJTA build_jta(Model model, const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid,
                      const GeneralQuadratureOptions& options) {
  switch (model) {
    case Model::linear:
      return jta_linear(pulse, wg, grid);
    case Model::sinc:
      return jta_sinc(pulse, wg, grid);
    case Model::simple_sxpm:
      return jta_simple(pulse, wg, grid);
    case Model::general_quadrature:
      return jta_general(pulse, wg, grid, options);
  }
  throw ConfigError("unknown model");
}

}  // namespace sfwm
