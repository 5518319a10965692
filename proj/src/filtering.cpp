#include "sfwm/filtering.hpp"

#include <cmath>
#include <complex>

#include "sfwm/errors.hpp"

namespace sfwm {

namespace {

using namespace std::complex_literals;

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

double gaussian_kernel(double sigma_f, double tau) {
  return std::numbers::sqrt2 * sigma_f * std::exp(-sigma_f * sigma_f * tau * tau);
}

// K(a, t) = f(x_a - t_b) for every output coordinate x_a and source time t_b.
Eigen::MatrixXd kernel_matrix(double sigma_f, const UniformGrid& out, const UniformGrid& source) {
  Eigen::MatrixXd k(static_cast<Eigen::Index>(out.size()), static_cast<Eigen::Index>(source.size()));
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = 0; b < source.size(); ++b) {
      k(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          gaussian_kernel(sigma_f, out.coordinate(a) - source.coordinate(b));
    }
  }
  return k;
}

void require_both_gaussian(const FilterPair& filters, const char* what) {
  if (filters.signal.is_delta() || filters.idler.is_delta()) {
    throw ConfigError(std::string(what) + " requires Gaussian filters on both signal and idler");
  }
}

}  // namespace

FilterSpec FilterSpec::from_ratio(const PumpPulse& pulse, double ratio) {
  if (ratio == 0.0) return unfiltered();
  return gaussian(pulse.sigma_omega() / ratio);
}

double FilterSpec::fwhm() const noexcept {
  if (is_delta()) return std::numeric_limits<double>::infinity();
  return 2.0 * std::sqrt(2.0 * std::log(2.0)) * sigma_f;
}

double FilterSpec::ratio(const PumpPulse& pulse) const noexcept {
  return is_delta() ? 0.0 : pulse.sigma_omega() / sigma_f;
}

std::vector<std::string> FilterSpec::problems(const std::string& label) const {
  std::vector<std::string> out;
  if (shape == FilterShape::gaussian && (!(sigma_f > 0.0) || !std::isfinite(sigma_f))) {
    out.push_back("nonpositive filter bandwidth (" + label + ")");
  }
  return out;
}

std::optional<double> time_kernel(const FilterSpec& filter, double tau) {
  if (filter.is_delta()) return std::nullopt;
  return gaussian_kernel(filter.sigma_f, tau);
}

std::optional<RealVector> sample_time_kernel(const FilterSpec& filter, const UniformGrid& grid) {
  if (filter.is_delta()) return std::nullopt;
  RealVector k(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    k(static_cast<Eigen::Index>(i)) = gaussian_kernel(filter.sigma_f, grid.coordinate(i));
  }
  return k;
}

FilterOverlap overlap(const FilterSpec& filter, double dT) {
  if (filter.is_delta()) return {0.0, kDeltaOverlapWeight};
  const double s = filter.sigma_f;
  return {s * kSqrt2Pi * std::exp(-s * s * dT * dT / 4.0), 0.0};
}

double overlap_numeric(const std::function<double(double)>& kernel, const UniformGrid& integration_grid, double dT) {
  // Translation invariance: O(T - T') = int f(tau - dT/sqrt2) f(tau) dtau.
  const double shift = dT / std::numbers::sqrt2;
  const RealVector w = integration_grid.trapezoid_weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < integration_grid.size(); ++i) {
    const double tau = integration_grid.coordinate(i);
    sum += w(static_cast<Eigen::Index>(i)) * kernel(tau - shift) * kernel(tau);
  }
  return sum;
}

JointAmplitudeMatrix filtered_jta(const DiagonalJTA& jta, const FilterPair& filters) {
  const TemporalGrid& grid = jta.grid();
  const auto n = static_cast<Eigen::Index>(grid.size());
  const ComplexVector& amp = jta.values();

  if (filters.signal.is_delta() && filters.idler.is_delta()) {
    throw ConfigError(
        "unfiltered signal and idler leave a pure delta ridge; use the single-sided metrics instead");
  }

  ComplexMatrix out(n, n);
  if (filters.idler.is_delta() || filters.signal.is_delta()) {
    // The delta kernel pins the unfiltered coordinate to the generation time.
    const bool idler_free = filters.idler.is_delta();
    const double sigma = idler_free ? filters.signal.sigma_f : filters.idler.sigma_f;
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        const Eigen::Index source = idler_free ? b : a;
        const double lag = grid.coordinate(static_cast<std::size_t>(idler_free ? a : b)) -
                           grid.coordinate(static_cast<std::size_t>(source));
        out(a, b) = amp(source) * gaussian_kernel(sigma, lag) / kSqrt2Pi;
      }
    }
    return JointAmplitudeMatrix(Domain::time, grid, grid, std::move(out));
  }

  const Eigen::MatrixXd ks = kernel_matrix(filters.signal.sigma_f, grid, grid);
  const Eigen::MatrixXd ki = kernel_matrix(filters.idler.sigma_f, grid, grid);
  const RealVector w = grid.trapezoid_weights() / (2.0 * std::numbers::pi);
  const RealVector re = w.cwiseProduct(amp.real());
  const RealVector im = w.cwiseProduct(amp.imag());
  const Eigen::MatrixXd real_part = (ks * re.asDiagonal()) * ki.transpose();
  const Eigen::MatrixXd imag_part = (ks * im.asDiagonal()) * ki.transpose();
  out = real_part.cast<std::complex<double>>() + 1i * imag_part.cast<std::complex<double>>();
  return JointAmplitudeMatrix(Domain::time, grid, grid, std::move(out));
}

JointAmplitudeMatrix filtered_jta_linear_gaussian(const PumpPulse& pulse, const Waveguide& wg,
                                                  const FilterPair& filters, const TemporalGrid& grid) {
  require_both_gaussian(filters, "closed-form filtered JTA");
  const double lam = filters.lambda(pulse);
  const double mu = filters.mu(pulse);
  const double sw = pulse.sigma_omega();
  const double denom = 2.0 * lam * lam * mu * mu + lam * lam + mu * mu;
  const std::complex<double> prefactor =
      1i * phi_max(pulse, wg) * sw / (std::sqrt(std::numbers::pi) * std::sqrt(denom));

  const auto n = static_cast<Eigen::Index>(grid.size());
  ComplexMatrix out(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const double ts = grid.coordinate(static_cast<std::size_t>(a));
    for (Eigen::Index b = 0; b < n; ++b) {
      const double ti = grid.coordinate(static_cast<std::size_t>(b));
      const double q = 2.0 * mu * mu * ts * ts + 2.0 * lam * lam * ti * ti + (ti - ts) * (ti - ts);
      out(a, b) = prefactor * std::exp(-sw * sw * q / denom);
    }
  }
  return JointAmplitudeMatrix(Domain::time, grid, grid, std::move(out));
}

SeriesExpansion filtered_jta_gaussian_series(const PumpPulse& pulse, const Waveguide& wg, const FilterPair& filters,
                                             const TemporalGrid& grid, double tolerance) {
  if (!(tolerance > 0.0)) throw ConfigError("series tolerance must be positive");
  if (!wg.lossless()) throw ModelMismatchError("Gaussian series assumes a lossless guide");
  require_both_gaussian(filters, "Gaussian series");

  const double phi = phi_max(pulse, wg);
  const double lam2 = std::pow(filters.lambda(pulse), 2);
  const double mu2 = std::pow(filters.mu(pulse), 2);
  const double sw2 = std::pow(pulse.sigma_omega(), 2);
  const std::complex<double> lead = 1i * phi * pulse.sigma_omega() / std::sqrt(std::numbers::pi);

  const auto n = static_cast<Eigen::Index>(grid.size());
  const RealVector t = grid.coordinates();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);

  std::complex<double> coefficient = 1.0;  // (3 i phi)^k / k!
  double bound = 1.0;                      // (3 phi)^k / k!
  int k = 0;
  for (; bound >= tolerance; ++k) {
    const double order = 1.0 + k;
    const double denom = 2.0 * order * lam2 * mu2 + lam2 + mu2;
    const std::complex<double> weight = lead * coefficient / std::sqrt(denom);
    for (Eigen::Index b = 0; b < n; ++b) {
      const double ti = t(b);
      for (Eigen::Index a = 0; a < n; ++a) {
        const double ts = t(a);
        const double q = 2.0 * order * (lam2 * ti * ti + mu2 * ts * ts) + (ti - ts) * (ti - ts);
        sum(a, b) += weight * std::exp(-q * sw2 / denom);
      }
    }
    coefficient *= 3i * phi / (k + 1.0);
    bound *= 3.0 * phi / (k + 1.0);
    if (phi == 0.0) {
      ++k;
      break;
    }
  }

  // Tail of the exponential series from order k on.
  double residual = 0.0;
  for (int j = k; bound > 0.0 && j < k + 1000; ++j) {
    residual += bound;
    if (bound < 1e-300 || bound < residual * 1e-17) break;
    bound *= 3.0 * phi / (j + 1.0);
  }
  return {JointAmplitudeMatrix(Domain::time, grid, grid, std::move(sum)), k, residual};
}

}  // namespace sfwm
