#include "sfwm/joint_amplitude.hpp"

#include <cmath>

#include "sfwm/errors.hpp"

namespace sfwm {

std::string_view to_string(Domain domain) noexcept { return domain == Domain::time ? "time" : "frequency"; }

JointAmplitudeMatrix::JointAmplitudeMatrix(Domain domain, UniformGrid signal_axis, UniformGrid idler_axis,
                                           ComplexMatrix values)
    : domain_(domain), signal_(std::move(signal_axis)), idler_(std::move(idler_axis)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.rows()) != signal_.size() ||
      static_cast<std::size_t>(values_.cols()) != idler_.size()) {
    throw ConfigError("joint amplitude shape does not match its axes");
  }
  require_finite(values_, "joint amplitude");
}

double JointAmplitudeMatrix::l2_norm() const { return values_.norm() * std::sqrt(cell_area()); }

}  // namespace sfwm
