#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sfwm/filtering.hpp"
#include "sfwm/grid.hpp"
#include "sfwm/jta.hpp"
#include "sfwm/metrics.hpp"
#include "sfwm/pump.hpp"

namespace sfwm {

inline constexpr double kDefaultSpanSigmas = 8.0;
inline constexpr std::size_t kDefaultGridPoints = 512;

/// Temporal grid wide enough for the pump and for the broadest filter
/// point-spread function: the half-width is span_sigmas * sigma_eff with
/// sigma_eff = max(sigma_t, 1 / sigma_f over Gaussian filters), and
/// dt = 2 * span_sigmas * sigma_eff / n_points.
/// Requires span_sigmas >= 6 and n_points a power of two >= 64.
TemporalGrid build_temporal_grid(const PumpPulse& pulse, std::span<const FilterSpec> filters,
                                 double span_sigmas = kDefaultSpanSigmas, std::size_t n_points = kDefaultGridPoints);

struct GridSettings {
  std::size_t n_points = kDefaultGridPoints;
  double span_sigmas = kDefaultSpanSigmas;
};

struct SimulationConfig {
  PumpPulse pump;
  Waveguide waveguide;
  FilterPair filters;
  GridSettings grid;
  Model model = Model::simple_sxpm;
  GeneralQuadratureOptions quadrature;
  EtaConvention eta_convention = EtaConvention::conjugated;

  /// The grid implied by `grid` for this pump and these filters.
  TemporalGrid temporal_grid() const;
};

/// Every rule violation in `cfg`, sorted and deduplicated. Empty means valid.
std::vector<std::string> config_problems(const SimulationConfig& cfg);

/// Returns `cfg` unchanged if valid; otherwise throws ConfigError listing
/// all problems.
SimulationConfig validate_config(SimulationConfig cfg);

}  // namespace sfwm
