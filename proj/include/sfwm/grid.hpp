#pragma once

#include <cstddef>

#include <Eigen/Dense>

namespace sfwm {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Throws DegenerateInputError naming `what` if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const char* what);

bool is_power_of_two(std::size_t n) noexcept;

/// Uniform sampling of a line, symmetric about `center`:
///   x_i = center + (i - (n-1)/2) * step,  i = 0..n-1
/// so no sample sits exactly on the center for even n.
class UniformGrid {
 public:
  UniformGrid(std::size_t n_points, double step, double center = 0.0);

  std::size_t size() const noexcept { return n_; }
  double step() const noexcept { return step_; }
  double center() const noexcept { return center_; }
  double coordinate(std::size_t i) const noexcept;
  /// Nearest sample index. Undefined for x outside the sampled range.
  std::size_t index_of(double x) const noexcept;
  double first() const noexcept { return coordinate(0); }
  double last() const noexcept { return coordinate(n_ - 1); }
  RealVector coordinates() const;
  /// Trapezoid weights (step, with half weight on the two end points).
  RealVector trapezoid_weights() const;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  std::size_t n_;
  double step_;
  double center_;
};

/// Time axis in picoseconds. Power-of-two length, at least 8 samples, so that
/// it pairs exactly with a SpectralGrid under the DFT.
class TemporalGrid : public UniformGrid {
 public:
  TemporalGrid(std::size_t n_points, double dt, double center = 0.0);

  double dt() const noexcept { return step(); }
};

/// Detuning axis in rad/ps, conjugate to a TemporalGrid:
/// n * dt * d_omega == 2*pi.
class SpectralGrid : public UniformGrid {
 public:
  explicit SpectralGrid(const TemporalGrid& conjugate);

  double d_omega() const noexcept { return step(); }
};

}  // namespace sfwm
