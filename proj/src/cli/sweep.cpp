#include "sfwm/cli/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <fstream>
#include <thread>

#include "sfwm/cli/csv.hpp"
#include "sfwm/cli/pipeline.hpp"
#include "sfwm/errors.hpp"

namespace sfwm::cli {

SimulationConfig apply_sweep_point(SimulationConfig cfg, SweepParameter parameter, double value) {
  switch (parameter) {
    case SweepParameter::phi_max: {
      const double gl = cfg.waveguide.gamma * cfg.waveguide.length;
      if (value != 0.0 && !(gl > 0.0)) throw ConfigError("phi_max sweep needs positive gamma and length");
      cfg.pump.peak_power = value == 0.0 ? 0.0 : value / gl;
      break;
    }
    case SweepParameter::lambda:
      cfg.filters.signal = FilterSpec::from_ratio(cfg.pump, value);
      break;
    case SweepParameter::mu:
      cfg.filters.idler = FilterSpec::from_ratio(cfg.pump, value);
      break;
    case SweepParameter::sigma_t:
      cfg.pump.sigma_t = value;
      break;
    case SweepParameter::delta_beta0:
      cfg.waveguide.delta_beta0 = value;
      break;
  }
  return cfg;
}

std::vector<ResultRow> run_sweep(const SimulationConfig& base, const SweepSpec& sweep, unsigned workers) {
  const std::size_t n_models = sweep.models.size();
  const std::size_t n_rows = sweep.values.size() * n_models;
  std::vector<ResultRow> rows(n_rows);
  std::vector<std::exception_ptr> failures(n_rows);

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t k = next++; k < n_rows; k = next++) {
      try {
        const double value = sweep.values[k / n_models];
        SimulationConfig cfg = apply_sweep_point(base, sweep.parameter, value);
        cfg.model = sweep.models[k % n_models];
        Evaluation e = evaluate(cfg);
        rows[k] = ResultRow{sweep.parameter,
                            value,
                            cfg.model,
                            e.phi_max,
                            e.lambda,
                            e.mu,
                            cfg.pump.sigma_t,
                            cfg.waveguide.delta_beta0,
                            e.metrics.eta,
                            e.metrics.purity,
                            e.metrics.nu,
                            e.n_schmidt_modes_99,
                            std::move(e.warnings)};
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n_rows, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& thread : pool) thread.join();

  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "parameter,value,model,phi_max,lambda,mu,sigma_t,delta_beta0,eta,purity,nu,n_schmidt_modes_99,warnings\n";
  for (const ResultRow& r : rows) {
    std::string warnings;
    for (const auto& w : r.warnings) warnings += (warnings.empty() ? "" : "; ") + w;
    const std::array<std::string, 13> fields{std::string(to_string(r.parameter)),
                                             format_double(r.value),
                                             std::string(to_string(r.model)),
                                             format_double(r.phi_max),
                                             format_double(r.lambda),
                                             format_double(r.mu),
                                             format_double(r.sigma_t),
                                             format_double(r.delta_beta0),
                                             format_double(r.eta),
                                             format_double(r.purity),
                                             r.nu ? format_double(*r.nu) : std::string(),
                                             std::to_string(r.n_schmidt_modes_99),
                                             warnings};
    write_row(out, fields);
  }
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_sweep_csv(out, rows);
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

}  // namespace sfwm::cli
