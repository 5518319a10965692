#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfwm/cli/config_io.hpp"
#include "sfwm/cli/pipeline.hpp"
#include "sfwm/cli/sweep.hpp"
#include "sfwm/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kConfig = 2, kNumerical = 3, kIo = 4 };

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-pair source simulator: filtered joint amplitudes, pair rate, purity"};
  app.require_subcommand(1);
  app.fallthrough();

  sfwm::cli::Overrides overrides;
  std::size_t grid_points = 0;
  double span_sigmas = 0.0;
  app.add_option("--grid-points", grid_points, "Temporal grid size (power of two >= 64)");
  app.add_option("--span-sigmas", span_sigmas, "Grid half-width in units of the widest time scale (>= 6)");
  app.add_flag("--as-printed-eq9", overrides.as_printed_tpa,
               "Use the bare length instead of Z_eff in the two-photon-absorption denominator");
  app.add_flag("--non-conjugated-eta", overrides.non_conjugated_eta,
               "Pair probability without complex conjugation (comparison only)");

  std::string config_path;
  std::string out_path;
  std::string sweep_path;
  std::string matrix_format = "both";
  unsigned workers = 0;

  auto* simulate = app.add_subcommand("simulate", "Run one configuration and write a result bundle");
  simulate->add_option("--config", config_path, "JSON configuration")->required();
  simulate->add_option("--out", out_path, "Output directory")->required();
  simulate->add_option("--matrix-format", matrix_format, "triplets, polar or both")
      ->check(CLI::IsMember({"triplets", "polar", "both"}));

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and write a CSV table");
  sweep->add_option("--config", config_path, "JSON configuration")->required();
  sweep->add_option("--sweep", sweep_path, "JSON sweep description")->required();
  sweep->add_option("--out", out_path, "Output CSV file")->required();
  sweep->add_option("--workers", workers, "Worker threads (0 = all cores)");

  auto* validate = app.add_subcommand("validate", "Check a configuration without running it");
  validate->add_option("--config", config_path, "JSON configuration")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }
  if (grid_points != 0) overrides.grid_points = grid_points;
  if (span_sigmas != 0.0) overrides.span_sigmas = span_sigmas;

  try {
    const sfwm::cli::LoadedConfig loaded = sfwm::cli::load_config(config_path, overrides);

    if (*validate) {
      std::cout << config_path << ": ok\n";
    } else if (*simulate) {
      const auto result = sfwm::cli::run_simulation(loaded);
      std::vector<sfwm::cli::MatrixFormat> formats;
      if (matrix_format != "polar") formats.push_back(sfwm::cli::MatrixFormat::triplets);
      if (matrix_format != "triplets") formats.push_back(sfwm::cli::MatrixFormat::polar);
      sfwm::cli::write_bundle(result, out_path, formats);
      print_warnings(result.evaluation.warnings);
      std::cout << "eta " << result.evaluation.metrics.eta << "  purity " << result.evaluation.metrics.purity
                << "  -> " << out_path << '\n';
    } else if (*sweep) {
      const auto spec = sfwm::cli::load_sweep(sweep_path);
      const auto rows = sfwm::cli::run_sweep(loaded.simulation, spec, workers);
      sfwm::cli::write_sweep_csv(out_path, rows);
      std::cout << rows.size() << " rows -> " << out_path << '\n';
    }
  } catch (const sfwm::ConfigError& e) {
    for (const auto& p : e.problems()) std::cerr << "error: " << p << '\n';
    return kConfig;
  } catch (const sfwm::AccuracyError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const sfwm::DegenerateInputError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const sfwm::ModelMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfig;
  } catch (const sfwm::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  }
  return kOk;
}
