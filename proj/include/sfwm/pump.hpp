#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sfwm {

/// Gaussian input pump: P(0, tau) = peak_power * exp(-tau^2 / (2 sigma_t^2)).
/// Units: W and ps.
struct PumpPulse {
  double peak_power = 0.0;
  double sigma_t = 1.0;

  /// Spectral width of the pulse, 1 / (2 sigma_t), in rad/ps.
  double sigma_omega() const noexcept { return 0.5 / sigma_t; }

  std::vector<std::string> problems() const;
};

/// Propagation parameters of the guide. gamma in 1/(W m), length in m,
/// delta_beta0 and alpha in 1/m, alpha2 is the power-normalized two-photon
/// absorption rate in 1/(W m), beta1 in ps/m (common to pump, signal, idler).
struct Waveguide {
  double gamma = 0.0;
  double length = 0.0;
  double delta_beta0 = 0.0;
  double alpha = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;

  bool lossless() const noexcept { return alpha == 0.0 && alpha2 == 0.0; }
  std::vector<std::string> problems() const;
};

/// Kerr material and mode data used to derive gamma. SI units.
struct Material {
  double n2 = 0.0;           // m^2/W
  double lambda_pump = 0.0;  // m
  double a_eff = 0.0;        // m^2

  std::vector<std::string> problems() const;
};

/// Transverse field amplitude sampled on a rectangular grid with spacings
/// dx, dy (m). Samples where `core` is true are treated as nonlinear.
struct ModeProfile {
  Eigen::MatrixXd amplitude;
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> core;
  double dx = 1.0;
  double dy = 1.0;
};

/// How the two-photon-absorption denominator of the power evolution is
/// evaluated. `effective_length` uses Z_eff(z) (the exact solution of
/// dP/dz = -alpha P - alpha2 P^2); `as_printed` uses the bare z.
/// Both agree when alpha == 0.
enum class TpaDenominator { effective_length, as_printed };

double pump_power_profile(const PumpPulse& pulse, double tau);

/// Z_eff = (1 - exp(-alpha z)) / alpha, continuous at alpha = 0.
double effective_length(double alpha, double z);

double propagate_power(const PumpPulse& pulse, const Waveguide& wg, double z, double tau,
                       TpaDenominator denominator = TpaDenominator::effective_length);

/// Self-phase theta_p(z, tau) = (gamma / alpha2) ln(1 + alpha2 P(0,tau) Z_eff(z)),
/// continuous in the alpha2 -> 0 and alpha -> 0 limits.
double nonlinear_phase(const PumpPulse& pulse, const Waveguide& wg, double z, double tau);

/// gamma = 2 pi n2 / (lambda A_eff), in 1/(W m).
double nonlinear_parameter(const Material& material);

/// A_eff = (sum |F|^2 dA)^2 / sum_core |F|^4 dA.
double effective_area(const ModeProfile& mode);

struct FreeCarrierCheck {
  double ratio = 0.0;
  bool pass = false;
};

/// Free-carrier effects are negligible when h nu / (sigma_FCA T0) >> I0.
/// `ratio` is the left side over I0; the check passes when ratio >= threshold.
/// SI units throughout.
FreeCarrierCheck check_free_carrier_regime(double photon_energy, double sigma_fca, double pulse_duration,
                                           double peak_intensity, double threshold = 10.0);

/// Peak nonlinear phase gamma * L * P0.
double phi_max(const PumpPulse& pulse, const Waveguide& wg);

}  // namespace sfwm
