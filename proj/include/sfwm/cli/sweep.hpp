#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sfwm/cli/config_io.hpp"
#include "sfwm/config.hpp"

namespace sfwm::cli {

struct ResultRow {
  SweepParameter parameter = SweepParameter::phi_max;
  double value = 0.0;
  Model model = Model::linear;
  double phi_max = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  double sigma_t = 0.0;
  double delta_beta0 = 0.0;
  double eta = 0.0;
  double purity = 0.0;
  std::optional<double> nu;
  std::size_t n_schmidt_modes_99 = 0;
  std::vector<std::string> warnings;
};

/// `base` with one parameter replaced. phi_max rescales the peak power;
/// lambda and mu replace the signal or idler filter (0 = unfiltered);
/// sigma_t keeps the filter bandwidths fixed.
SimulationConfig apply_sweep_point(SimulationConfig base, SweepParameter parameter, double value);

/// One row per (value, model), in sweep order then model order. Points are
/// spread over `workers` threads (0 = hardware concurrency); the output does
/// not depend on the thread count. The first failing point, in row order,
/// rethrows its exception.
std::vector<ResultRow> run_sweep(const SimulationConfig& base, const SweepSpec& sweep, unsigned workers = 0);

void write_sweep_csv(std::ostream& out, const std::vector<ResultRow>& rows);

/// Throws IoError.
void write_sweep_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows);

}  // namespace sfwm::cli
