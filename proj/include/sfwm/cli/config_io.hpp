#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfwm/config.hpp"
#include "sfwm/pump.hpp"

namespace sfwm::cli {

/// Inputs of the free-carrier validity check, in SI units. Fields left out of
/// the file are derived from the material and pump sections when possible.
struct RegimeCheckSpec {
  double photon_energy = 0.0;   // J
  double sigma_fca = 0.0;       // m^2
  double pulse_duration = 0.0;  // s
  double peak_intensity = 0.0;  // W/m^2
  double threshold = 10.0;
};

struct LoadedConfig {
  SimulationConfig simulation;
  std::optional<Material> material;
  std::optional<RegimeCheckSpec> regime_check;
};

/// Command-line settings that take precedence over the file.
struct Overrides {
  std::optional<std::size_t> grid_points;
  std::optional<double> span_sigmas;
  bool as_printed_tpa = false;
  bool non_conjugated_eta = false;
};

void apply_overrides(SimulationConfig& cfg, const Overrides& overrides);

/// Parses and validates a configuration document. `origin` prefixes error
/// messages, which read "origin:line: path: problem". Throws ConfigError.
LoadedConfig parse_config(std::string_view text, std::string_view origin, const Overrides& overrides = {});

/// Reads and parses a file. Throws IoError if it cannot be read.
LoadedConfig load_config(const std::filesystem::path& path, const Overrides& overrides = {});

enum class SweepParameter { phi_max, lambda, mu, sigma_t, delta_beta0 };

std::string_view to_string(SweepParameter parameter) noexcept;

struct SweepSpec {
  SweepParameter parameter = SweepParameter::phi_max;
  std::vector<double> values;
  std::vector<Model> models;
};

/// Sweep document:
///   {"parameter": "phi_max", "range": {"start": 0, "stop": 2, "count": 21},
///    "models": ["linear", "simple_sxpm"]}
/// or with "values": [...] instead of "range". Values must be strictly
/// increasing; ranges need count >= 2.
SweepSpec parse_sweep(std::string_view text, std::string_view origin);

SweepSpec load_sweep(const std::filesystem::path& path);

/// Whole file as a string. Throws IoError.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace sfwm::cli
