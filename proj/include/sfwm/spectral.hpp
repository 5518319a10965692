#pragma once

#include "sfwm/filtering.hpp"
#include "sfwm/joint_amplitude.hpp"
#include "sfwm/pump.hpp"

namespace sfwm {

enum class Mode { signal, idler };

/// Time -> frequency on both axes with kernel exp(+i Delta tau):
///   JSA(Ds, Di) = (1/2pi) iint JTA(ts, ti) exp(i (Ds ts + Di ti)) dts dti
/// evaluated exactly on the conjugate grids by FFT. On sqrt(cell)-weighted
/// samples the map is unitary, so l2_norm() and singular values carry over.
/// Throws ConfigError unless the input is in the time domain on power-of-two
/// axes.
JointAmplitudeMatrix jta_to_jsa(const JointAmplitudeMatrix& jta);

/// Inverse of jta_to_jsa back onto the given temporal axes, which must be
/// conjugate to the input's spectral axes.
JointAmplitudeMatrix jsa_to_jta(const JointAmplitudeMatrix& jsa, const TemporalGrid& signal_axis,
                                const TemporalGrid& idler_axis);

/// Same, onto center-origin temporal axes.
JointAmplitudeMatrix jsa_to_jta(const JointAmplitudeMatrix& jsa);

/// Linear-model filtered JSA for a Gaussian pump:
///   (i gamma L P0 / 2) / (sqrt(2pi) sigma_w) exp(-((Ds+Di)/2)^2 / (2 sigma_w^2)) f_s(Ds) f_i(Di)
/// with f(D) = exp(-D^2 / (4 sigma_f^2)), or 1 for an unfiltered mode.
JointAmplitudeMatrix jsa_linear_gaussian(const PumpPulse& pulse, const Waveguide& wg, const FilterPair& filters,
                                         const SpectralGrid& grid);

/// Marginal intensity of one mode: trapezoid integral of |JSA|^2 over the
/// other detuning.
RealVector marginal_spectrum(const JointAmplitudeMatrix& jsa, Mode mode);

/// <Delta^2> of a marginal, normalized by its total weight.
double second_moment(const RealVector& marginal, const UniformGrid& axis);

}  // namespace sfwm
