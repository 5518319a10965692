#include "sfwm/cli/pipeline.hpp"

#include <array>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "sfwm/cli/csv.hpp"
#include "sfwm/errors.hpp"
#include "sfwm/filtering.hpp"
#include "sfwm/jta.hpp"
#include "sfwm/spectral.hpp"

namespace sfwm::cli {

namespace {

constexpr double kProbePhase = 1e-9;

/// Same guide and pulse shape, rescaled so that phi_max is tiny but nonzero.
SimulationConfig probe_config(SimulationConfig cfg) {
  const double length = cfg.waveguide.length;
  if (cfg.waveguide.gamma > 0.0) {
    cfg.pump.peak_power = kProbePhase / (cfg.waveguide.gamma * length);
  } else if (cfg.pump.peak_power > 0.0) {
    cfg.waveguide.gamma = kProbePhase / (cfg.pump.peak_power * length);
  } else {
    cfg.pump.peak_power = 1.0;
    cfg.waveguide.gamma = kProbePhase / length;
  }
  return cfg;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace

Evaluation evaluate(const SimulationConfig& input) {
  const SimulationConfig cfg = validate_config(input);
  const TemporalGrid grid = cfg.temporal_grid();
  const DiagonalJTA jta = build_jta(cfg.model, cfg.pump, cfg.waveguide, grid, cfg.quadrature);

  Evaluation out{phi_max(cfg.pump, cfg.waveguide), cfg.filters.lambda(cfg.pump), cfg.filters.mu(cfg.pump), {}, 0, {},
                 filtered_jta(jta, cfg.filters)};

  const bool vanishing = jta.is_zero();
  std::optional<DiagonalJTA> probe;
  if (vanishing) {
    const SimulationConfig p = probe_config(cfg);
    probe = build_jta(p.model, p.pump, p.waveguide, grid, p.quadrature);
  }
  const DiagonalJTA& shape_jta = probe ? *probe : jta;
  const std::optional<JointAmplitudeMatrix> probe_filtered =
      probe ? std::optional(filtered_jta(*probe, cfg.filters)) : std::nullopt;
  const JointAmplitudeMatrix& shaped = probe_filtered ? *probe_filtered : out.filtered;

  if (!vanishing) {
    const QuadratureEstimate eta = pair_probability(jta, cfg.filters, cfg.eta_convention);
    out.metrics.eta = eta.value;
    if (eta.warning) out.warnings.push_back(*eta.warning);
  }
  const SchmidtDecomposition schmidt = purity_schmidt(shaped);
  out.metrics.purity = schmidt.purity;
  out.metrics.schmidt_weights = schmidt.weights;
  out.n_schmidt_modes_99 = schmidt.modes_capturing(0.99);
  if (!cfg.filters.signal.is_delta()) out.metrics.nu = heralding_efficiency(shape_jta, cfg.filters);

  const LowExcitation low = validate_low_excitation(out.metrics.eta);
  out.metrics.low_excitation_ok = low.ok;
  if (low.annotation) out.warnings.push_back(*low.annotation);
  return out;
}

SimulationResult run_simulation(const LoadedConfig& loaded) {
  Evaluation evaluation = evaluate(loaded.simulation);
  JointAmplitudeMatrix jsa = jta_to_jsa(evaluation.filtered);
  SimulationResult out{loaded.simulation, std::move(evaluation), loaded.regime_check, std::nullopt, jsa,
                       marginal_spectrum(jsa, Mode::signal), marginal_spectrum(jsa, Mode::idler)};
  if (const auto& spec = loaded.regime_check) {
    out.regime = check_free_carrier_regime(spec->photon_energy, spec->sigma_fca, spec->pulse_duration,
                                           spec->peak_intensity, spec->threshold);
    if (!out.regime->pass) {
      out.evaluation.warnings.push_back("free-carrier regime check failed: ratio " +
                                        format_double(out.regime->ratio) + " below threshold " +
                                        format_double(spec->threshold));
    }
  }
  return out;
}

std::string metrics_json(const SimulationResult& result) {
  const SimulationConfig& cfg = result.config;
  const Evaluation& e = result.evaluation;
  const TemporalGrid grid = cfg.temporal_grid();
  nlohmann::ordered_json doc;
  doc["model"] = std::string(to_string(cfg.model));
  doc["phi_max"] = e.phi_max;
  doc["lambda"] = e.lambda;
  doc["mu"] = e.mu;
  doc["eta"] = e.metrics.eta;
  doc["purity"] = e.metrics.purity;
  doc["nu"] = e.metrics.nu ? nlohmann::ordered_json(*e.metrics.nu) : nlohmann::ordered_json(nullptr);
  doc["n_schmidt_modes_99"] = e.n_schmidt_modes_99;
  doc["low_excitation_ok"] = e.metrics.low_excitation_ok;
  doc["grid"] = {{"n_points", grid.size()}, {"dt", grid.dt()}, {"span_sigmas", cfg.grid.span_sigmas}};
  if (result.regime) {
    doc["regime_check"] = {{"ratio", result.regime->ratio},
                           {"threshold", result.regime_spec->threshold},
                           {"pass", result.regime->pass}};
  }
  doc["warnings"] = e.warnings;
  const std::size_t shown = std::min<std::size_t>(e.metrics.schmidt_weights.size(), 32);
  doc["schmidt_weights"] = std::vector<double>(e.metrics.schmidt_weights.begin(),
                                               e.metrics.schmidt_weights.begin() + static_cast<std::ptrdiff_t>(shown));
  return doc.dump(2) + "\n";
}

void write_bundle(const SimulationResult& result, const std::filesystem::path& dir,
                  const std::vector<MatrixFormat>& formats) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  write_text(dir / "metrics.json", metrics_json(result));

  for (MatrixFormat format : formats) {
    const char* suffix = format == MatrixFormat::triplets ? ".csv" : "_polar.csv";
    export_matrix(result.evaluation.filtered, dir / (std::string("jta") + suffix), format);
    export_matrix(result.jsa, dir / (std::string("jsa") + suffix), format);
  }

  std::ofstream out(dir / "marginals.csv", std::ios::binary);
  if (!out) throw IoError("cannot write " + (dir / "marginals.csv").string());
  out << "detuning,signal,idler\n";
  const RealVector detuning = result.jsa.signal_axis().coordinates();
  for (Eigen::Index k = 0; k < detuning.size(); ++k) {
    const std::array<std::string, 3> row{format_double(detuning(k)), format_double(result.signal_marginal(k)),
                                         format_double(result.idler_marginal(k))};
    write_row(out, row);
  }
  out.flush();
  if (!out) throw IoError("error writing " + (dir / "marginals.csv").string());
}

}  // namespace sfwm::cli
