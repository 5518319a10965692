#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sfwm/cli/config_io.hpp"
#include "sfwm/cli/export.hpp"
#include "sfwm/config.hpp"
#include "sfwm/joint_amplitude.hpp"
#include "sfwm/metrics.hpp"
#include "sfwm/pump.hpp"

namespace sfwm::cli {

/// Metrics of one configuration, with the filtered amplitude they came from.
struct Evaluation {
  double phi_max = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  PairMetrics metrics;
  std::size_t n_schmidt_modes_99 = 0;
  std::vector<std::string> warnings;
  JointAmplitudeMatrix filtered;
};

/// Builds the JTA for cfg.model, filters it and computes eta, purity and
/// heralding efficiency. A vanishing amplitude (phi_max == 0) reports
/// eta = 0 and takes the shape metrics from the phi_max -> 0 limit.
/// nu is left empty when the signal mode is unfiltered.
Evaluation evaluate(const SimulationConfig& cfg);

struct SimulationResult {
  SimulationConfig config;
  Evaluation evaluation;
  std::optional<RegimeCheckSpec> regime_spec;
  std::optional<FreeCarrierCheck> regime;
  JointAmplitudeMatrix jsa;
  RealVector signal_marginal;
  RealVector idler_marginal;
};

SimulationResult run_simulation(const LoadedConfig& loaded);

/// Writes metrics.json, marginals.csv and the JTA/JSA matrices into `dir`
/// (created if missing) in the requested formats. Throws IoError.
void write_bundle(const SimulationResult& result, const std::filesystem::path& dir,
                  const std::vector<MatrixFormat>& formats = {MatrixFormat::triplets, MatrixFormat::polar});

/// The metrics.json document, pretty-printed.
std::string metrics_json(const SimulationResult& result);

}  // namespace sfwm::cli
