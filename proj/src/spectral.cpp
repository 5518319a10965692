#include "sfwm/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "sfwm/errors.hpp"

namespace sfwm {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(i 2pi num / n), with num reduced mod n first to keep the argument small.
cd twiddle(double num, double n) { return std::polar(1.0, kTwoPi * std::fmod(num, n) / n); }

// One axis of the transform between a temporal grid (step dt, given center)
// and its center-origin conjugate spectral grid. With c = (n-1)/2:
//   Delta_k tau_m = Delta_k * center + 2pi (k - c)(m - c) / n
class AxisTransform {
 public:
  AxisTransform(std::size_t n, double dt, double center) : n_(n), pre_(n), post_(n) {
    const double nd = static_cast<double>(n);
    const double c = 0.5 * (nd - 1.0);
    const double d_omega = kTwoPi / (nd * dt);
    const cd constant = twiddle(c * c, nd);
    for (std::size_t i = 0; i < n; ++i) {
      const double id = static_cast<double>(i);
      const double omega = (id - c) * d_omega;
      pre_[i] = std::conj(twiddle(c * id, nd));
      post_[i] = constant * std::conj(twiddle(c * id, nd)) * std::polar(1.0, omega * center);
    }
    forward_scale_ = dt / std::sqrt(kTwoPi);
    inverse_scale_ = d_omega / std::sqrt(kTwoPi);
    fft_.SetFlag(Eigen::FFT<double>::Unscaled);
  }

  // Samples on the temporal grid -> samples on the spectral grid.
  void forward(std::vector<cd>& v) {
    for (std::size_t m = 0; m < n_; ++m) v[m] *= pre_[m];
    fft_.inv(buffer_, v);  // sum_m x_m exp(+2 pi i k m / n)
    for (std::size_t k = 0; k < n_; ++k) v[k] = forward_scale_ * post_[k] * buffer_[k];
  }

  void inverse(std::vector<cd>& v) {
    for (std::size_t k = 0; k < n_; ++k) v[k] *= std::conj(post_[k]);
    fft_.fwd(buffer_, v);  // sum_k x_k exp(-2 pi i k m / n)
    for (std::size_t m = 0; m < n_; ++m) v[m] = inverse_scale_ * std::conj(pre_[m]) * buffer_[m];
  }

 private:
  std::size_t n_;
  std::vector<cd> pre_;
  std::vector<cd> post_;
  std::vector<cd> buffer_;
  double forward_scale_ = 1.0;
  double inverse_scale_ = 1.0;
  Eigen::FFT<double> fft_;
};

template <typename Apply>
ComplexMatrix transform_2d(const ComplexMatrix& in, AxisTransform& along_rows_index, AxisTransform& along_cols_index,
                           Apply apply) {
  ComplexMatrix out = in;
  std::vector<cd> line(static_cast<std::size_t>(in.rows()));
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    for (Eigen::Index i = 0; i < out.rows(); ++i) line[static_cast<std::size_t>(i)] = out(i, j);
    apply(along_rows_index, line);
    for (Eigen::Index i = 0; i < out.rows(); ++i) out(i, j) = line[static_cast<std::size_t>(i)];
  }
  line.resize(static_cast<std::size_t>(in.cols()));
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) line[static_cast<std::size_t>(j)] = out(i, j);
    apply(along_cols_index, line);
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = line[static_cast<std::size_t>(j)];
  }
  return out;
}

TemporalGrid as_temporal(const UniformGrid& axis) {
  if (!is_power_of_two(axis.size()) || axis.size() < 8) {
    throw ConfigError("time/frequency transform needs power-of-two axes");
  }
  return TemporalGrid(axis.size(), axis.step(), axis.center());
}

bool conjugate(const UniformGrid& spectral, const TemporalGrid& temporal) {
  const SpectralGrid expected(temporal);
  return spectral.size() == expected.size() && spectral.center() == 0.0 &&
         std::abs(spectral.step() - expected.step()) <= 1e-12 * expected.step();
}

double gaussian_filter_response(const FilterSpec& f, double detuning) {
  if (f.is_delta()) return 1.0;
  return std::exp(-detuning * detuning / (4.0 * f.sigma_f * f.sigma_f));
}

}  // namespace

JointAmplitudeMatrix jta_to_jsa(const JointAmplitudeMatrix& jta) {
  if (jta.domain() != Domain::time) throw ConfigError("jta_to_jsa expects a time-domain amplitude");
  const TemporalGrid ts = as_temporal(jta.signal_axis());
  const TemporalGrid ti = as_temporal(jta.idler_axis());
  AxisTransform signal(ts.size(), ts.dt(), ts.center());
  AxisTransform idler(ti.size(), ti.dt(), ti.center());
  ComplexMatrix out = transform_2d(jta.values(), signal, idler, [](AxisTransform& t, std::vector<cd>& v) {
    t.forward(v);
  });
  return JointAmplitudeMatrix(Domain::frequency, SpectralGrid(ts), SpectralGrid(ti), std::move(out));
}

JointAmplitudeMatrix jsa_to_jta(const JointAmplitudeMatrix& jsa, const TemporalGrid& signal_axis,
                                const TemporalGrid& idler_axis) {
  if (jsa.domain() != Domain::frequency) throw ConfigError("jsa_to_jta expects a frequency-domain amplitude");
  if (!conjugate(jsa.signal_axis(), signal_axis) || !conjugate(jsa.idler_axis(), idler_axis)) {
    throw ConfigError("temporal axes are not conjugate to the spectral axes");
  }
  AxisTransform signal(signal_axis.size(), signal_axis.dt(), signal_axis.center());
  AxisTransform idler(idler_axis.size(), idler_axis.dt(), idler_axis.center());
  ComplexMatrix out = transform_2d(jsa.values(), signal, idler, [](AxisTransform& t, std::vector<cd>& v) {
    t.inverse(v);
  });
  return JointAmplitudeMatrix(Domain::time, signal_axis, idler_axis, std::move(out));
}

JointAmplitudeMatrix jsa_to_jta(const JointAmplitudeMatrix& jsa) {
  const auto centered = [](const UniformGrid& spectral) {
    const double n = static_cast<double>(spectral.size());
    return TemporalGrid(spectral.size(), kTwoPi / (n * spectral.step()), 0.0);
  };
  return jsa_to_jta(jsa, centered(jsa.signal_axis()), centered(jsa.idler_axis()));
}

JointAmplitudeMatrix jsa_linear_gaussian(const PumpPulse& pulse, const Waveguide& wg, const FilterPair& filters,
                                         const SpectralGrid& grid) {
  const double sw = pulse.sigma_omega();
  const cd prefactor = cd(0.0, phi_max(pulse, wg) / 2.0) / (std::sqrt(kTwoPi) * sw);
  const auto n = static_cast<Eigen::Index>(grid.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double ds = grid.coordinate(static_cast<std::size_t>(a));
    for (Eigen::Index b = 0; b < n; ++b) {
      const double di = grid.coordinate(static_cast<std::size_t>(b));
      const double centre = 0.5 * (ds + di);
      out(a, b) = prefactor * std::exp(-centre * centre / (2.0 * sw * sw)) *
                  gaussian_filter_response(filters.signal, ds) * gaussian_filter_response(filters.idler, di);
    }
  }
  return JointAmplitudeMatrix(Domain::frequency, grid, grid, std::move(out));
}

RealVector marginal_spectrum(const JointAmplitudeMatrix& jsa, Mode mode) {
  if (jsa.domain() != Domain::frequency) throw ConfigError("marginal spectrum expects a frequency-domain amplitude");
  const Eigen::MatrixXd intensity = jsa.values().cwiseAbs2();
  if (mode == Mode::signal) return intensity * jsa.idler_axis().trapezoid_weights();
  return intensity.transpose() * jsa.signal_axis().trapezoid_weights();
}

double second_moment(const RealVector& marginal, const UniformGrid& axis) {
  const RealVector x = axis.coordinates();
  const double total = marginal.sum();
  if (!(total > 0.0)) throw DegenerateInputError("second moment of an empty spectrum");
  return marginal.dot(x.cwiseAbs2()) / total;
}

}  // namespace sfwm
