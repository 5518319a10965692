#pragma once

#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sfwm/joint_amplitude.hpp"
#include "sfwm/jta.hpp"
#include "sfwm/pump.hpp"

namespace sfwm {

enum class FilterShape { gaussian, none };

/// Field-amplitude filter f(Delta) = exp(-Delta^2 / (4 sigma_f^2)), sigma_f in
/// rad/ps. `none` is the infinitely wide (unfiltered) limit.
struct FilterSpec {
  FilterShape shape = FilterShape::none;
  double sigma_f = 0.0;

  static FilterSpec gaussian(double sigma_f) { return {FilterShape::gaussian, sigma_f}; }
  static FilterSpec unfiltered() { return {}; }
  /// Gaussian filter with sigma_omega / sigma_f == ratio; ratio 0 means unfiltered.
  static FilterSpec from_ratio(const PumpPulse& pulse, double ratio);

  bool is_delta() const noexcept { return shape == FilterShape::none; }
  /// Intensity FWHM 2 sqrt(2 ln 2) sigma_f; infinite when unfiltered.
  double fwhm() const noexcept;
  /// Pump-to-filter bandwidth ratio sigma_omega / sigma_f (0 when unfiltered).
  double ratio(const PumpPulse& pulse) const noexcept;
  std::vector<std::string> problems(const std::string& label) const;
};

struct FilterPair {
  FilterSpec signal;
  FilterSpec idler;

  double lambda(const PumpPulse& pulse) const noexcept { return signal.ratio(pulse); }
  double mu(const PumpPulse& pulse) const noexcept { return idler.ratio(pulse); }
};

/// Coefficient of delta(T - T') in the overlap of an unfiltered mode.
inline constexpr double kDeltaOverlapWeight = 2.0 * std::numbers::sqrt2 * std::numbers::pi;

/// Time-domain point-spread function sqrt(2) sigma_f exp(-sigma_f^2 tau^2).
/// nullopt stands for the Dirac delta of an unfiltered mode.
std::optional<double> time_kernel(const FilterSpec& filter, double tau);
std::optional<RealVector> sample_time_kernel(const FilterSpec& filter, const UniformGrid& grid);

/// O(dT) = int f(tau - T/sqrt2) f(tau - T'/sqrt2) dtau with dT = T - T'.
/// For an unfiltered mode the overlap is kDeltaOverlapWeight * delta(dT); the
/// regular part is then zero and `delta_weight` carries the coefficient.
struct FilterOverlap {
  double value = 0.0;
  double delta_weight = 0.0;

  bool is_delta() const noexcept { return delta_weight != 0.0; }
};

/// Gaussian closed form sigma_f sqrt(2 pi) exp(-sigma_f^2 dT^2 / 4).
FilterOverlap overlap(const FilterSpec& filter, double dT);

/// Trapezoid evaluation of the overlap integral for an arbitrary real kernel
/// on the given integration grid.
double overlap_numeric(const std::function<double(double)>& kernel, const UniformGrid& integration_grid, double dT);

/// Two-time filtered amplitude on the JTA's own grid:
///   JTA_f(ts, ti) = (1/2pi) int JTA(t) f_s(ts - t) f_i(ti - t) dt
/// (trapezoid rule in t). When one side is unfiltered its delta kernel is
/// integrated out symbolically, e.g. for an unfiltered idler
///   JTA_f(ts, ti) = JTA(ti) f_s(ts - ti) / sqrt(2 pi).
/// Throws ConfigError when both sides are unfiltered.
JointAmplitudeMatrix filtered_jta(const DiagonalJTA& jta, const FilterPair& filters);

/// Closed form of the filtered linear-model amplitude for Gaussian pump and
/// filters. Throws ConfigError unless both filters are Gaussian.
JointAmplitudeMatrix filtered_jta_linear_gaussian(const PumpPulse& pulse, const Waveguide& wg,
                                                  const FilterPair& filters, const TemporalGrid& grid);

struct SeriesExpansion {
  JointAmplitudeMatrix matrix;
  /// Number of terms summed (orders 0 .. terms-1).
  int terms = 0;
  /// Sum of (3 phi_max)^n / n! over the dropped orders: bound on the
  /// truncation error relative to the linear-model peak amplitude.
  double residual_bound = 0.0;
};

/// Filtered simple SPM/XPM amplitude as a sum of Gaussians, one per order of
/// the expanded phase factor exp(3 i phi). Summation stops at the first order
/// whose magnitude bound (3 phi_max)^n / n! falls below `tolerance`.
SeriesExpansion filtered_jta_gaussian_series(const PumpPulse& pulse, const Waveguide& wg, const FilterPair& filters,
                                             const TemporalGrid& grid, double tolerance = 1e-12);

}  // namespace sfwm
