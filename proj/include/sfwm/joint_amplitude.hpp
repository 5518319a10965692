#pragma once

#include <string_view>

#include "sfwm/grid.hpp"

namespace sfwm {

enum class Domain { time, frequency };

std::string_view to_string(Domain domain) noexcept;

/// Dense sampled two-photon amplitude. Rows index the signal coordinate,
/// columns the idler coordinate. Entries are samples of the continuous
/// amplitude (not measure-weighted).
class JointAmplitudeMatrix {
 public:
  JointAmplitudeMatrix(Domain domain, UniformGrid signal_axis, UniformGrid idler_axis, ComplexMatrix values);

  Domain domain() const noexcept { return domain_; }
  const UniformGrid& signal_axis() const noexcept { return signal_; }
  const UniformGrid& idler_axis() const noexcept { return idler_; }
  const ComplexMatrix& values() const noexcept { return values_; }

  /// Area of one grid cell.
  double cell_area() const noexcept { return signal_.step() * idler_.step(); }
  /// Discrete L2 norm sqrt(sum |v|^2 * cell_area). For a filtered JTA this
  /// squared is the pair probability; it is preserved by the time/frequency
  /// transform.
  double l2_norm() const;

 private:
  Domain domain_;
  UniformGrid signal_;
  UniformGrid idler_;
  ComplexMatrix values_;
};

}  // namespace sfwm
