#pragma once

#include <functional>
#include <string_view>

#include "sfwm/grid.hpp"
#include "sfwm/pump.hpp"

namespace sfwm {

/// Which closed form (or quadrature) produced a joint temporal amplitude.
enum class Model { linear, sinc, simple_sxpm, general_quadrature };

std::string_view to_string(Model model) noexcept;
/// Throws ConfigError for unknown names.
Model parse_model(std::string_view name);

/// Unfiltered joint temporal amplitude on the diagonal tau_s == tau_i.
/// The full two-time amplitude is values(tau_s) * delta(tau_s - tau_i);
/// only the diagonal coefficient is stored.
class DiagonalJTA {
 public:
  DiagonalJTA(TemporalGrid grid, ComplexVector values, Model model);

  const TemporalGrid& grid() const noexcept { return grid_; }
  const ComplexVector& values() const noexcept { return values_; }
  Model model() const noexcept { return model_; }
  bool is_zero() const { return values_.cwiseAbs().maxCoeff() == 0.0; }

 private:
  TemporalGrid grid_;
  ComplexVector values_;
  Model model_;
};

/// i gamma P(0,tau) L: no nonlinear phase.
DiagonalJTA jta_linear(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid);

/// i gamma P(0,tau) L exp(3 i gamma P(0,tau) L): pump SPM plus the doubled XPM
/// on signal and idler, averaged over the guide. Requires a lossless guide;
/// delta_beta0 is ignored.
DiagonalJTA jta_simple(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid);

/// Lossless closed form keeping phase mismatch and the power-induced shift of
/// the phase-matching band:
///   i gamma P L exp(3 i gamma P L + i dB0 L / 2) sinc((dB0 - 2 gamma P) L / 2)
/// with sinc(x) = sin(x) / x.
DiagonalJTA jta_sinc(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid);

struct GeneralQuadratureOptions {
  int order = 64;
  TpaDenominator denominator = TpaDenominator::effective_length;
  /// Largest tolerated max-norm relative change between order n and 2n.
  double tolerance = 1e-8;
};

/// Lossy model, evaluated per tau by Gauss-Legendre quadrature over z:
///   i gamma exp(4 i theta(L,tau)) int_0^L P(z,tau) exp(i dB0 z - 2 i theta(z,tau)) dz
/// The rule of order n is checked against order 2n; the 2n result is
/// returned, and AccuracyError is thrown if they differ by more than the
/// tolerance (relative to the peak magnitude).
DiagonalJTA jta_general(const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid,
                        const GeneralQuadratureOptions& options = {});

/// Multiplies the amplitude pointwise by exp(i phase(tau)).
DiagonalJTA with_phase(const DiagonalJTA& jta, const std::function<double(double)>& phase);

/// Dispatches on `model`.
DiagonalJTA build_jta(Model model, const PumpPulse& pulse, const Waveguide& wg, const TemporalGrid& grid,
                      const GeneralQuadratureOptions& options = {});

}  // namespace sfwm
