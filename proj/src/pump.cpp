#include "sfwm/pump.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "sfwm/errors.hpp"

namespace sfwm {

namespace {

// ln(1 + x) / x, series branch for tiny x.
double log1p_over_x(double x) {
  if (std::abs(x) < 1e-8) return 1.0 - x / 2.0 + x * x / 3.0;
  return std::log1p(x) / x;
}

}  // namespace

std::vector<std::string> PumpPulse::problems() const {
  std::vector<std::string> out;
  if (!(peak_power >= 0.0) || !std::isfinite(peak_power)) out.emplace_back("negative peak power");
  if (!(sigma_t > 0.0) || !std::isfinite(sigma_t)) out.emplace_back("nonpositive pulse duration");
  return out;
}

std::vector<std::string> Waveguide::problems() const {
  std::vector<std::string> out;
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) out.emplace_back("negative nonlinear parameter");
  if (!(length > 0.0) || !std::isfinite(length)) out.emplace_back("nonpositive length");
  if (!std::isfinite(delta_beta0)) out.emplace_back("non-finite phase mismatch");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) out.emplace_back("negative linear loss");
  if (!(alpha2 >= 0.0) || !std::isfinite(alpha2)) out.emplace_back("negative two-photon absorption");
  if (!std::isfinite(beta1)) out.emplace_back("non-finite group delay");
  return out;
}

std::vector<std::string> Material::problems() const {
  std::vector<std::string> out;
  if (!(n2 > 0.0)) out.emplace_back("nonpositive Kerr index");
  if (!(lambda_pump > 0.0)) out.emplace_back("nonpositive pump wavelength");
  if (!(a_eff > 0.0)) out.emplace_back("nonpositive effective area");
  return out;
}

double pump_power_profile(const PumpPulse& pulse, double tau) {
  return pulse.peak_power * std::exp(-tau * tau / (2.0 * pulse.sigma_t * pulse.sigma_t));
}

double effective_length(double alpha, double z) {
  if (alpha == 0.0) return z;
  if (std::isinf(z)) return 1.0 / alpha;
  return -std::expm1(-alpha * z) / alpha;
}

double propagate_power(const PumpPulse& pulse, const Waveguide& wg, double z, double tau,
                       TpaDenominator denominator) {
  const double p0 = pump_power_profile(pulse, tau);
  const double zeta = denominator == TpaDenominator::effective_length ? effective_length(wg.alpha, z) : z;
  return p0 * std::exp(-wg.alpha * z) / (1.0 + wg.alpha2 * p0 * zeta);
}

double nonlinear_phase(const PumpPulse& pulse, const Waveguide& wg, double z, double tau) {
  const double p0 = pump_power_profile(pulse, tau);
  const double linear = wg.gamma * p0 * effective_length(wg.alpha, z);
  if (wg.alpha2 == 0.0) return linear;
  return linear * log1p_over_x(wg.alpha2 * p0 * effective_length(wg.alpha, z));
}

double nonlinear_parameter(const Material& material) {
  return 2.0 * std::numbers::pi * material.n2 / (material.lambda_pump * material.a_eff);
}

double effective_area(const ModeProfile& mode) {
  if (mode.amplitude.rows() != mode.core.rows() || mode.amplitude.cols() != mode.core.cols()) {
    throw ConfigError("mode profile and core mask differ in shape");
  }
  if (!mode.amplitude.allFinite()) throw DegenerateInputError("mode profile contains non-finite samples");
  if (!mode.core.any()) throw DegenerateInputError("mode profile has no core samples");

  const double da = mode.dx * mode.dy;
  const Eigen::ArrayXXd intensity = mode.amplitude.array().square();
  const double total = intensity.sum() * da;
  const double core_sq = mode.core.array().select(intensity.square(), 0.0).sum() * da;
  if (!(core_sq > 0.0)) throw DegenerateInputError("mode profile has no in-core intensity");
  return total * total / core_sq;
}

FreeCarrierCheck check_free_carrier_regime(double photon_energy, double sigma_fca, double pulse_duration,
                                           double peak_intensity, double threshold) {
  if (!(photon_energy > 0.0) || !(sigma_fca > 0.0) || !(pulse_duration > 0.0) || !(peak_intensity >= 0.0)) {
    throw ConfigError("free-carrier check needs positive photon energy, cross-section, duration and I0 >= 0");
  }
  const double scale = photon_energy / (sigma_fca * pulse_duration);
  const double ratio = peak_intensity == 0.0 ? std::numeric_limits<double>::infinity() : scale / peak_intensity;
  return {ratio, ratio >= threshold};
}

double phi_max(const PumpPulse& pulse, const Waveguide& wg) { return wg.gamma * wg.length * pulse.peak_power; }

}  // namespace sfwm
