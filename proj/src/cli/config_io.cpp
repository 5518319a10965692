#include "sfwm/cli/config_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sfwm/cli/source_map.hpp"
#include "sfwm/errors.hpp"

namespace sfwm::cli {

using nlohmann::json;

namespace {

constexpr double kPlanck = 6.62607015e-34;
constexpr double kSpeedOfLight = 299792458.0;

/// Collects line-anchored problems while walking a parsed document.
class Reader {
 public:
  Reader(const json& root, std::string_view text, std::string_view origin)
      : root_(root), map_(SourceMap::scan(text)), origin_(origin) {}

  const json& root() const { return root_; }

  void problem(const std::string& pointer, const std::string& message) {
    problems_.push_back(origin_ + ":" + std::to_string(map_.line_of(pointer)) + ": " + display_path(pointer) + ": " +
                        message);
  }

  bool ok() const { return problems_.empty(); }

  void throw_if_failed() const {
    if (!problems_.empty()) throw ConfigError(problems_);
  }

  /// Object member `key` of `obj`, or nullptr when absent (recording a
  /// problem if it is required) or of the wrong type.
  const json* object(const json& obj, const std::string& pointer, const char* key, bool required) {
    const json* member = find(obj, pointer, key, required);
    if (member != nullptr && !member->is_object()) {
      problem(pointer + "/" + key, "expected an object");
      return nullptr;
    }
    return member;
  }

  std::optional<double> number(const json& obj, const std::string& pointer, const char* key, bool required) {
    const json* member = find(obj, pointer, key, required);
    if (member == nullptr) return std::nullopt;
    if (!member->is_number()) {
      problem(pointer + "/" + key, "expected a number");
      return std::nullopt;
    }
    return member->get<double>();
  }

  std::optional<std::size_t> count(const json& obj, const std::string& pointer, const char* key, bool required) {
    const json* member = find(obj, pointer, key, required);
    if (member == nullptr) return std::nullopt;
    if (!member->is_number_unsigned()) {
      problem(pointer + "/" + key, "expected a nonnegative integer");
      return std::nullopt;
    }
    return member->get<std::size_t>();
  }

  std::optional<std::string> text(const json& obj, const std::string& pointer, const char* key, bool required) {
    const json* member = find(obj, pointer, key, required);
    if (member == nullptr) return std::nullopt;
    if (!member->is_string()) {
      problem(pointer + "/" + key, "expected a string");
      return std::nullopt;
    }
    return member->get<std::string>();
  }

  void reject_unknown(const json& obj, const std::string& pointer, std::initializer_list<std::string_view> allowed) {
    for (const auto& item : obj.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
        problem(pointer + "/" + item.key(), "unknown key");
      }
    }
  }

 private:
  const json* find(const json& obj, const std::string& pointer, const char* key, bool required) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) problem(pointer + "/" + key, "required key missing");
      return nullptr;
    }
    return &*it;
  }

  const json& root_;
  SourceMap map_;
  std::string origin_;
  std::vector<std::string> problems_;
};

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto end = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
    throw ConfigError(std::string(origin) + ":" + std::to_string(line) + ": <root>: invalid JSON");
  }
}

struct PendingFilter {
  FilterShape shape = FilterShape::none;
  std::optional<double> sigma_f;
  std::optional<double> ratio;
};

std::optional<PendingFilter> read_filter(Reader& r, const json& obj, const std::string& pointer) {
  r.reject_unknown(obj, pointer, {"shape", "sigma_f", "ratio"});
  const auto shape = r.text(obj, pointer, "shape", true);
  if (!shape) return std::nullopt;
  PendingFilter out;
  if (*shape == "none") {
    if (obj.contains("sigma_f") || obj.contains("ratio")) r.problem(pointer, "unfiltered mode takes no bandwidth");
    return out;
  }
  if (*shape != "gaussian") {
    r.problem(pointer + "/shape", "unknown filter shape '" + *shape + "'");
    return std::nullopt;
  }
  out.shape = FilterShape::gaussian;
  out.sigma_f = r.number(obj, pointer, "sigma_f", false);
  out.ratio = r.number(obj, pointer, "ratio", false);
  if (out.sigma_f.has_value() == out.ratio.has_value()) {
    r.problem(pointer, "gaussian filter needs exactly one of sigma_f, ratio");
    return std::nullopt;
  }
  if (out.ratio && !(*out.ratio > 0.0)) {
    r.problem(pointer + "/ratio", "nonpositive bandwidth ratio");
    return std::nullopt;
  }
  return out;
}

FilterSpec resolve(const PendingFilter& f, const PumpPulse& pulse) {
  if (f.shape == FilterShape::none) return FilterSpec::unfiltered();
  if (f.ratio) return FilterSpec::from_ratio(pulse, *f.ratio);
  return FilterSpec::gaussian(*f.sigma_f);
}

/// JSON pointer of the key a rule violation is about.
std::string anchor_for(const std::string& message) {
  static const std::map<std::string, std::string, std::less<>> anchors{
      {"negative peak power", "/pump/peak_power"},
      {"nonpositive pulse duration", "/pump/sigma_t"},
      {"negative nonlinear parameter", "/waveguide/gamma"},
      {"nonpositive length", "/waveguide/length"},
      {"non-finite phase mismatch", "/waveguide/delta_beta0"},
      {"negative linear loss", "/waveguide/alpha"},
      {"negative two-photon absorption", "/waveguide/alpha2"},
      {"non-finite group delay", "/waveguide/beta1"},
      {"nonpositive filter bandwidth (signal)", "/filters/signal"},
      {"nonpositive filter bandwidth (idler)", "/filters/idler"},
      {"at least one filter must be gaussian", "/filters"},
      {"lossy medium requires general_quadrature", "/model"},
      {"quadrature order below 8", "/quadrature/order"},
      {"grid size must be a power of two >= 64", "/grid/n_points"},
      {"grid span below 6 sigma", "/grid/span_sigmas"},
  };
  auto it = anchors.find(message);
  return it == anchors.end() ? std::string() : it->second;
}

}  // namespace

void apply_overrides(SimulationConfig& cfg, const Overrides& overrides) {
  if (overrides.grid_points) cfg.grid.n_points = *overrides.grid_points;
  if (overrides.span_sigmas) cfg.grid.span_sigmas = *overrides.span_sigmas;
  if (overrides.as_printed_tpa) cfg.quadrature.denominator = TpaDenominator::as_printed;
  if (overrides.non_conjugated_eta) cfg.eta_convention = EtaConvention::as_printed;
}

LoadedConfig parse_config(std::string_view text, std::string_view origin, const Overrides& overrides) {
  const json doc = parse_json(text, origin);
  Reader r(doc, text, origin);
  if (!doc.is_object()) {
    r.problem("", "expected an object");
    r.throw_if_failed();
  }
  r.reject_unknown(doc, "",
                   {"material", "pump", "waveguide", "filters", "grid", "model", "quadrature", "eta_convention",
                    "regime_check"});

  LoadedConfig out;
  SimulationConfig& cfg = out.simulation;

  if (const json* m = r.object(doc, "", "material", false)) {
    r.reject_unknown(*m, "/material", {"n2", "lambda_pump", "a_eff"});
    Material mat;
    mat.n2 = r.number(*m, "/material", "n2", true).value_or(0.0);
    mat.lambda_pump = r.number(*m, "/material", "lambda_pump", true).value_or(0.0);
    mat.a_eff = r.number(*m, "/material", "a_eff", true).value_or(0.0);
    if (r.ok()) {
      for (const auto& p : mat.problems()) r.problem("/material", p);
    }
    out.material = mat;
  }

  if (const json* w = r.object(doc, "", "waveguide", true)) {
    r.reject_unknown(*w, "/waveguide", {"gamma", "length", "delta_beta0", "alpha", "alpha2", "beta1"});
    const auto gamma = r.number(*w, "/waveguide", "gamma", false);
    if (gamma && out.material) {
      r.problem("/waveguide/gamma", "given both directly and through the material section");
    } else if (gamma) {
      cfg.waveguide.gamma = *gamma;
    } else if (out.material) {
      if (r.ok()) cfg.waveguide.gamma = nonlinear_parameter(*out.material);
    } else {
      r.problem("/waveguide/gamma", "required key missing (or give a material section)");
    }
    cfg.waveguide.length = r.number(*w, "/waveguide", "length", true).value_or(0.0);
    cfg.waveguide.delta_beta0 = r.number(*w, "/waveguide", "delta_beta0", false).value_or(0.0);
    cfg.waveguide.alpha = r.number(*w, "/waveguide", "alpha", false).value_or(0.0);
    cfg.waveguide.alpha2 = r.number(*w, "/waveguide", "alpha2", false).value_or(0.0);
    cfg.waveguide.beta1 = r.number(*w, "/waveguide", "beta1", false).value_or(0.0);
  }

  if (const json* p = r.object(doc, "", "pump", true)) {
    r.reject_unknown(*p, "/pump", {"peak_power", "phi_max", "sigma_t"});
    cfg.pump.sigma_t = r.number(*p, "/pump", "sigma_t", true).value_or(1.0);
    const auto power = r.number(*p, "/pump", "peak_power", false);
    const auto phi = r.number(*p, "/pump", "phi_max", false);
    if (power.has_value() == phi.has_value()) {
      r.problem("/pump", "needs exactly one of peak_power, phi_max");
    } else if (power) {
      cfg.pump.peak_power = *power;
    } else if (*phi == 0.0) {
      cfg.pump.peak_power = 0.0;
    } else if (cfg.waveguide.gamma > 0.0 && cfg.waveguide.length > 0.0) {
      cfg.pump.peak_power = *phi / (cfg.waveguide.gamma * cfg.waveguide.length);
    } else {
      r.problem("/pump/phi_max", "nonzero phi_max needs positive gamma and length");
    }
  }

  if (const json* f = r.object(doc, "", "filters", true)) {
    r.reject_unknown(*f, "/filters", {"signal", "idler"});
    std::optional<PendingFilter> signal;
    std::optional<PendingFilter> idler = PendingFilter{};
    if (const json* s = r.object(*f, "/filters", "signal", true)) signal = read_filter(r, *s, "/filters/signal");
    if (const json* i = r.object(*f, "/filters", "idler", false)) idler = read_filter(r, *i, "/filters/idler");
    if (signal && idler && r.ok()) {
      cfg.filters.signal = resolve(*signal, cfg.pump);
      cfg.filters.idler = resolve(*idler, cfg.pump);
    }
  }

  if (const json* g = r.object(doc, "", "grid", false)) {
    r.reject_unknown(*g, "/grid", {"n_points", "span_sigmas"});
    cfg.grid.n_points = r.count(*g, "/grid", "n_points", false).value_or(kDefaultGridPoints);
    cfg.grid.span_sigmas = r.number(*g, "/grid", "span_sigmas", false).value_or(kDefaultSpanSigmas);
  }

  if (const auto model = r.text(doc, "", "model", true)) {
    try {
      cfg.model = parse_model(*model);
    } catch (const ConfigError&) {
      r.problem("/model", "unknown model '" + *model + "'");
    }
  }

  if (const json* q = r.object(doc, "", "quadrature", false)) {
    r.reject_unknown(*q, "/quadrature", {"order", "tolerance", "tpa_denominator"});
    cfg.quadrature.order = static_cast<int>(r.count(*q, "/quadrature", "order", false).value_or(64));
    cfg.quadrature.tolerance = r.number(*q, "/quadrature", "tolerance", false).value_or(1e-8);
    if (!(cfg.quadrature.tolerance > 0.0)) r.problem("/quadrature/tolerance", "nonpositive tolerance");
    if (const auto denom = r.text(*q, "/quadrature", "tpa_denominator", false)) {
      if (*denom == "effective_length") {
        cfg.quadrature.denominator = TpaDenominator::effective_length;
      } else if (*denom == "as_printed") {
        cfg.quadrature.denominator = TpaDenominator::as_printed;
      } else {
        r.problem("/quadrature/tpa_denominator", "expected 'effective_length' or 'as_printed'");
      }
    }
  }

  if (const auto conv = r.text(doc, "", "eta_convention", false)) {
    if (*conv == "conjugated") {
      cfg.eta_convention = EtaConvention::conjugated;
    } else if (*conv == "as_printed") {
      cfg.eta_convention = EtaConvention::as_printed;
    } else {
      r.problem("/eta_convention", "expected 'conjugated' or 'as_printed'");
    }
  }

  if (const json* rc = r.object(doc, "", "regime_check", false)) {
    const std::string at = "/regime_check";
    r.reject_unknown(*rc, at, {"photon_energy", "sigma_fca", "pulse_duration", "peak_intensity", "threshold"});
    RegimeCheckSpec spec;
    spec.sigma_fca = r.number(*rc, at, "sigma_fca", true).value_or(0.0);
    spec.threshold = r.number(*rc, at, "threshold", false).value_or(10.0);
    spec.pulse_duration = r.number(*rc, at, "pulse_duration", false).value_or(cfg.pump.sigma_t * 1e-12);
    if (auto e = r.number(*rc, at, "photon_energy", false)) {
      spec.photon_energy = *e;
    } else if (out.material && out.material->lambda_pump > 0.0) {
      spec.photon_energy = kPlanck * kSpeedOfLight / out.material->lambda_pump;
    } else {
      r.problem(at + "/photon_energy", "required key missing (or give material.lambda_pump)");
    }
    if (auto i = r.number(*rc, at, "peak_intensity", false)) {
      spec.peak_intensity = *i;
    } else if (out.material && out.material->a_eff > 0.0) {
      spec.peak_intensity = cfg.pump.peak_power / out.material->a_eff;
    } else {
      r.problem(at + "/peak_intensity", "required key missing (or give material.a_eff)");
    }
    if (!(spec.sigma_fca > 0.0)) r.problem(at + "/sigma_fca", "nonpositive cross section");
    if (!(spec.pulse_duration > 0.0)) r.problem(at + "/pulse_duration", "nonpositive pulse duration");
    if (!(spec.photon_energy > 0.0)) r.problem(at + "/photon_energy", "nonpositive photon energy");
    if (!(spec.peak_intensity >= 0.0)) r.problem(at + "/peak_intensity", "negative intensity");
    out.regime_check = spec;
  }

  r.throw_if_failed();

  apply_overrides(cfg, overrides);
  for (const auto& message : config_problems(cfg)) r.problem(anchor_for(message), message);
  r.throw_if_failed();
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return buffer.str();
}

LoadedConfig load_config(const std::filesystem::path& path, const Overrides& overrides) {
  return parse_config(read_text_file(path), path.string(), overrides);
}

std::string_view to_string(SweepParameter parameter) noexcept {
  switch (parameter) {
    case SweepParameter::phi_max: return "phi_max";
    case SweepParameter::lambda: return "lambda";
    case SweepParameter::mu: return "mu";
    case SweepParameter::sigma_t: return "sigma_t";
    case SweepParameter::delta_beta0: return "delta_beta0";
  }
  return "?";
}

SweepSpec parse_sweep(std::string_view text, std::string_view origin) {
  const json doc = parse_json(text, origin);
  Reader r(doc, text, origin);
  if (!doc.is_object()) {
    r.problem("", "expected an object");
    r.throw_if_failed();
  }
  r.reject_unknown(doc, "", {"parameter", "values", "range", "models"});
  SweepSpec out;

  if (const auto name = r.text(doc, "", "parameter", true)) {
    bool found = false;
    for (auto p : {SweepParameter::phi_max, SweepParameter::lambda, SweepParameter::mu, SweepParameter::sigma_t,
                   SweepParameter::delta_beta0}) {
      if (to_string(p) == *name) {
        out.parameter = p;
        found = true;
      }
    }
    if (!found) r.problem("/parameter", "unknown sweep parameter '" + *name + "'");
  }

  const bool has_values = doc.contains("values");
  if (has_values == doc.contains("range")) {
    r.problem("", "needs exactly one of values, range");
  } else if (has_values) {
    const json& values = doc["values"];
    if (!values.is_array() || values.empty()) {
      r.problem("/values", "expected a nonempty array of numbers");
    } else {
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (!values[k].is_number()) {
          r.problem("/values/" + std::to_string(k), "expected a number");
        } else {
          out.values.push_back(values[k].get<double>());
        }
      }
    }
  } else if (const json* range = r.object(doc, "", "range", true)) {
    r.reject_unknown(*range, "/range", {"start", "stop", "count"});
    const auto start = r.number(*range, "/range", "start", true);
    const auto stop = r.number(*range, "/range", "stop", true);
    const auto count = r.count(*range, "/range", "count", true);
    if (count && *count < 2) {
      r.problem("/range/count", "count must be at least 2");
    } else if (start && stop && count) {
      const double step = (*stop - *start) / static_cast<double>(*count - 1);
      for (std::size_t k = 0; k < *count; ++k) out.values.push_back(*start + step * static_cast<double>(k));
      out.values.back() = *stop;
    }
  }
  for (std::size_t k = 1; k < out.values.size(); ++k) {
    if (!(out.values[k] > out.values[k - 1])) {
      r.problem(has_values ? "/values/" + std::to_string(k) : "/range", "values must be strictly increasing");
      break;
    }
  }

  const json* models = doc.contains("models") ? &doc["models"] : nullptr;
  if (models == nullptr) {
    r.problem("/models", "required key missing");
  } else if (!models->is_array() || models->empty()) {
    r.problem("/models", "expected a nonempty array of model names");
  } else {
    for (std::size_t k = 0; k < models->size(); ++k) {
      const json& m = (*models)[k];
      try {
        if (!m.is_string()) throw ConfigError("not a string");
        out.models.push_back(parse_model(m.get<std::string>()));
      } catch (const ConfigError&) {
        r.problem("/models/" + std::to_string(k), "unknown model");
      }
    }
  }
  r.throw_if_failed();
  return out;
}

SweepSpec load_sweep(const std::filesystem::path& path) {
  return parse_sweep(read_text_file(path), path.string());
}

}  // namespace sfwm::cli
