#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sfwm {

/// Invalid or inconsistent input parameters. Carries every problem found,
/// not just the first one.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::string problem);
  explicit ConfigError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// A numerical procedure failed its own convergence test. Both estimates
/// are kept so callers can report how far apart they were.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double coarse, double fine);

  double coarse_estimate() const noexcept { return coarse_; }
  double fine_estimate() const noexcept { return fine_; }

 private:
  double coarse_;
  double fine_;
};

/// Input that is well-formed but carries no information (all-zero amplitude,
/// empty mode profile, ...).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model was asked to run outside the regime it describes.
class ModelMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sfwm
