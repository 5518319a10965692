#include "sfwm/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sfwm/errors.hpp"

namespace sfwm {

TemporalGrid build_temporal_grid(const PumpPulse& pulse, std::span<const FilterSpec> filters, double span_sigmas,
                                 std::size_t n_points) {
  if (!(span_sigmas >= 6.0)) throw ConfigError("grid span below 6 sigma");
  if (n_points < 64 || !is_power_of_two(n_points)) {
    throw ConfigError("grid size must be a power of two >= 64 (got " + std::to_string(n_points) + ")");
  }
  if (!(pulse.sigma_t > 0.0)) throw ConfigError("nonpositive pulse duration");

  double sigma_eff = pulse.sigma_t;
  for (const FilterSpec& f : filters) {
    if (!f.is_delta() && f.sigma_f > 0.0) sigma_eff = std::max(sigma_eff, 1.0 / f.sigma_f);
  }
  return TemporalGrid(n_points, 2.0 * span_sigmas * sigma_eff / static_cast<double>(n_points));
}

TemporalGrid SimulationConfig::temporal_grid() const {
  const std::array<FilterSpec, 2> f{filters.signal, filters.idler};
  return build_temporal_grid(pump, f, grid.span_sigmas, grid.n_points);
}

std::vector<std::string> config_problems(const SimulationConfig& cfg) {
  std::vector<std::string> out = cfg.pump.problems();
  const auto append = [&out](const std::vector<std::string>& more) { out.insert(out.end(), more.begin(), more.end()); };
  append(cfg.waveguide.problems());
  append(cfg.filters.signal.problems("signal"));
  append(cfg.filters.idler.problems("idler"));

  if (cfg.filters.signal.is_delta() && cfg.filters.idler.is_delta()) {
    out.emplace_back("at least one filter must be gaussian");
  }
  if (!cfg.waveguide.lossless() && cfg.model != Model::general_quadrature) {
    out.emplace_back("lossy medium requires general_quadrature");
  }
  if (cfg.model == Model::general_quadrature && cfg.quadrature.order < 8) {
    out.emplace_back("quadrature order below 8");
  }
  if (cfg.grid.n_points < 64 || !is_power_of_two(cfg.grid.n_points)) {
    out.emplace_back("grid size must be a power of two >= 64");
  }
  if (!(cfg.grid.span_sigmas >= 6.0)) out.emplace_back("grid span below 6 sigma");

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimulationConfig validate_config(SimulationConfig cfg) {
  auto problems = config_problems(cfg);
  if (!problems.empty()) throw ConfigError(std::move(problems));
  return cfg;
}

}  // namespace sfwm
