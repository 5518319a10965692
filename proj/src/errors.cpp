#include "sfwm/errors.hpp"

namespace sfwm {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += "; ";
    out += item;
  }
  return out;
}

}  // namespace

ConfigError::ConfigError(std::string problem) : ConfigError(std::vector<std::string>{std::move(problem)}) {}

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

AccuracyError::AccuracyError(const std::string& what, double coarse, double fine)
    : std::runtime_error(what), coarse_(coarse), fine_(fine) {}

}  // namespace sfwm
