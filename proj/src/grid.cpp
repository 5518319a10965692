#include "sfwm/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sfwm/errors.hpp"

namespace sfwm {

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw DegenerateInputError(std::string(what) + " contains non-finite entries");
  }
}

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

UniformGrid::UniformGrid(std::size_t n_points, double step, double center)
    : n_(n_points), step_(step), center_(center) {
  if (n_points < 2) throw ConfigError("grid needs at least two points");
  if (!(step > 0.0) || !std::isfinite(step)) throw ConfigError("grid step must be positive and finite");
  if (!std::isfinite(center)) throw ConfigError("grid center must be finite");
}

double UniformGrid::coordinate(std::size_t i) const noexcept {
  return center_ + (static_cast<double>(i) - 0.5 * static_cast<double>(n_ - 1)) * step_;
}

std::size_t UniformGrid::index_of(double x) const noexcept {
  const double offset = (x - center_) / step_ + 0.5 * static_cast<double>(n_ - 1);
  return static_cast<std::size_t>(std::lround(offset));
}

RealVector UniformGrid::coordinates() const {
  RealVector x(static_cast<Eigen::Index>(n_));
  for (std::size_t i = 0; i < n_; ++i) x(static_cast<Eigen::Index>(i)) = coordinate(i);
  return x;
}

RealVector UniformGrid::trapezoid_weights() const {
  RealVector w = RealVector::Constant(static_cast<Eigen::Index>(n_), step_);
  w(0) *= 0.5;
  w(w.size() - 1) *= 0.5;
  return w;
}

TemporalGrid::TemporalGrid(std::size_t n_points, double dt, double center)
    : UniformGrid(n_points, dt, center) {
  if (n_points < 8 || !is_power_of_two(n_points)) {
    throw ConfigError("temporal grid size must be a power of two >= 8 (got " + std::to_string(n_points) + ")");
  }
}

SpectralGrid::SpectralGrid(const TemporalGrid& conjugate)
    : UniformGrid(conjugate.size(),
                  2.0 * std::numbers::pi / (static_cast<double>(conjugate.size()) * conjugate.dt()), 0.0) {}

}  // namespace sfwm
