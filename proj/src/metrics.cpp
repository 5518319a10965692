#include "sfwm/metrics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include <Eigen/SVD>

#include "sfwm/errors.hpp"

namespace sfwm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLowExcitationLimit = 0.1;
constexpr double kRefinementTolerance = 1e-6;

// Samples of a diagonal JTA at spacing `step`, integrated with trapezoid weights.
struct Samples {
  ComplexVector values;
  double step;

  RealVector weights() const {
    RealVector w = RealVector::Constant(values.size(), step);
    w(0) *= 0.5;
    w(w.size() - 1) *= 0.5;
    return w;
  }
};

Samples all_samples(const DiagonalJTA& jta) { return {jta.values(), jta.grid().dt()}; }

Samples every_other_sample(const DiagonalJTA& jta) {
  const ComplexVector& v = jta.values();
  ComplexVector out((v.size() + 1) / 2);
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = v(2 * i);
  return {out, 2.0 * jta.grid().dt()};
}

// O_s(T - T') O_i(T - T') tabulated by index lag d = j - k, stored at d + n - 1.
RealVector lagged_overlap(const FilterPair& filters, Eigen::Index n, double step) {
  RealVector out(2 * n - 1);
  for (Eigen::Index d = -(n - 1); d <= n - 1; ++d) {
    const double dT = kSqrt2 * static_cast<double>(d) * step;
    out(d + n - 1) = overlap(filters.signal, dT).value * overlap(filters.idler, dT).value;
  }
  return out;
}

double two_sided_eta(const Samples& s, const FilterPair& filters, EtaConvention convention) {
  const Eigen::Index n = s.values.size();
  const ComplexVector c = s.weights().cast<std::complex<double>>().cwiseProduct(s.values);
  const RealVector kernel = lagged_overlap(filters, n, s.step);
  std::complex<double> sum = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    std::complex<double> inner = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      const std::complex<double> other = convention == EtaConvention::conjugated ? std::conj(c(k)) : c(k);
      inner += other * kernel(j - k + n - 1);
    }
    sum += c(j) * inner;
  }
  // dT dT' = 2 dt dt'
  return 2.0 * sum.real() / (8.0 * kPi * kPi);
}

double single_sided_eta_on(const Samples& s, const FilterSpec& herald) {
  const double o0 = overlap(herald, 0.0).value;
  const double integral = s.weights().dot(s.values.cwiseAbs2());
  // dT = sqrt2 dt
  return o0 / (2.0 * kSqrt2 * kPi) * kSqrt2 * integral;
}

void require_gaussian(const FilterSpec& f, const char* what) {
  if (f.is_delta()) throw ConfigError(std::string(what) + " requires a Gaussian filter");
}

QuadratureEstimate with_refinement_check(double fine, double coarse) {
  QuadratureEstimate est{fine, std::nullopt};
  const double scale = std::abs(fine);
  if (scale > 0.0 && std::abs(fine - coarse) > kRefinementTolerance * scale) {
    est.warning = "pair probability under-resolved: halving the grid changed it by " +
                  std::to_string(std::abs(fine - coarse) / scale) + " relative";
  }
  return est;
}

}  // namespace

QuadratureEstimate pair_probability(const DiagonalJTA& jta, const FilterPair& filters, EtaConvention convention) {
  if (filters.signal.is_delta() && filters.idler.is_delta()) {
    throw ConfigError("pair probability needs at least one Gaussian filter");
  }
  if (filters.signal.is_delta() || filters.idler.is_delta()) {
    const FilterSpec& herald = filters.signal.is_delta() ? filters.idler : filters.signal;
    return with_refinement_check(single_sided_eta_on(all_samples(jta), herald),
                                 single_sided_eta_on(every_other_sample(jta), herald));
  }
  return with_refinement_check(two_sided_eta(all_samples(jta), filters, convention),
                               two_sided_eta(every_other_sample(jta), filters, convention));
}

double gaussian_eta(double phi, double lambda, double mu) {
  const double q = lambda * lambda + mu * mu + 2.0 * lambda * lambda * mu * mu;
  if (!(q > 0.0)) throw ConfigError("pair probability diverges without filtering (lambda = mu = 0)");
  return phi * phi / (2.0 * kSqrt2) / std::sqrt(q);
}

std::size_t SchmidtDecomposition::modes_capturing(double fraction) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    acc += weights[k] * weights[k];
    if (acc >= fraction * (1.0 - 1e-12)) return k + 1;
  }
  return weights.size();
}

SchmidtDecomposition purity_schmidt(const JointAmplitudeMatrix& amplitude) {
  const ComplexMatrix scaled = amplitude.values() * std::sqrt(amplitude.cell_area());
  if (scaled.cwiseAbs().maxCoeff() == 0.0) throw DegenerateInputError("purity of an all-zero amplitude");

  Eigen::BDCSVD<ComplexMatrix> svd(scaled);
  const RealVector& s = svd.singularValues();
  const double cutoff = 1e-14 * s(0);

  SchmidtDecomposition out;
  double norm2 = 0.0;
  for (Eigen::Index k = 0; k < s.size() && s(k) >= cutoff; ++k) {
    out.weights.push_back(s(k));
    norm2 += s(k) * s(k);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& g : out.weights) {
    g *= inv;
    out.purity += g * g * g * g;
  }
  return out;
}

double purity_quadrature(const DiagonalJTA& jta, const FilterPair& filters, bool allow_large_grid) {
  require_gaussian(filters.signal, "four-fold purity quadrature (signal)");
  require_gaussian(filters.idler, "four-fold purity quadrature (idler)");
  const auto n = static_cast<Eigen::Index>(jta.grid().size());
  if (n > 128 && !allow_large_grid) {
    throw ConfigError("four-fold purity quadrature refused on " + std::to_string(n) +
                      " points (O(N^4) cost; limit 128 without override)");
  }
  if (jta.is_zero()) throw DegenerateInputError("purity of an all-zero JTA");

  const Samples s = all_samples(jta);
  const double eta = two_sided_eta(s, filters, EtaConvention::conjugated);
  const ComplexVector c = s.weights().cast<std::complex<double>>().cwiseProduct(s.values);

  Eigen::MatrixXd os(n, n);
  Eigen::MatrixXd oi(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const double dT = kSqrt2 * static_cast<double>(a - b) * s.step;
      os(a, b) = overlap(filters.signal, dT).value;
      oi(a, b) = overlap(filters.idler, dT).value;
    }
  }

  // sum_{1234} c1 c2* c3 c4* Os12 Os34 Oi14 Oi32 = sum_{13} c1 c3 X13 X31
  // with X_ab = sum_2 c2* Os_a2 Oi_b2.
  const ComplexMatrix x = os.cast<std::complex<double>>() * c.conjugate().asDiagonal() *
                          oi.transpose().cast<std::complex<double>>();
  const ComplexMatrix y = c.asDiagonal() * x;
  const std::complex<double> sum = y.cwiseProduct(y.transpose()).sum();

  // (1 / (2 sqrt(2 eta) pi))^4 with dT^4 = 4 dt^4.
  const double norm = 4.0 / (64.0 * eta * eta * std::pow(kPi, 4));
  return norm * sum.real();
}

double gaussian_purity(double lambda, double mu) {
  return std::sqrt(1.0 - 1.0 / ((1.0 + 2.0 * lambda * lambda) * (1.0 + 2.0 * mu * mu)));
}

double heralding_efficiency(const DiagonalJTA& jta, const FilterPair& filters) {
  require_gaussian(filters.signal, "heralding efficiency (signal)");
  const double herald_only = single_sided_eta(jta, filters.signal);
  if (herald_only == 0.0) throw DegenerateInputError("heralding efficiency undefined: no heralded pairs");
  return pair_probability(jta, filters).value / herald_only;
}

double gaussian_heralding_efficiency(double lambda, double mu) {
  if (!(lambda > 0.0)) throw ConfigError("heralding efficiency needs a filtered herald (lambda > 0)");
  return lambda / std::sqrt(lambda * lambda + mu * mu + 2.0 * lambda * lambda * mu * mu);
}

double single_sided_purity(const DiagonalJTA& jta, const FilterSpec& herald_filter) {
  require_gaussian(herald_filter, "single-sided purity");
  if (jta.is_zero()) throw DegenerateInputError("purity of an all-zero JTA");
  const Samples s = all_samples(jta);
  const double eta = single_sided_eta_on(s, herald_filter);
  const Eigen::Index n = s.values.size();
  const RealVector p = s.weights().cwiseProduct(s.values.cwiseAbs2());

  RealVector kernel(2 * n - 1);
  for (Eigen::Index d = -(n - 1); d <= n - 1; ++d) {
    const double o = overlap(herald_filter, kSqrt2 * static_cast<double>(d) * s.step).value;
    kernel(d + n - 1) = o * o;
  }
  double sum = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    double inner = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) inner += p(k) * kernel(j - k + n - 1);
    sum += p(j) * inner;
  }
  const double scale = 2.0 * kSqrt2 * kPi * eta;
  // dT dT' = 2 dt dt'
  return 2.0 * sum / (scale * scale);
}

double single_sided_eta(const DiagonalJTA& jta, const FilterSpec& herald_filter) {
  require_gaussian(herald_filter, "single-sided pair probability");
  return single_sided_eta_on(all_samples(jta), herald_filter);
}

LowExcitation validate_low_excitation(double eta) {
  if (eta <= kLowExcitationLimit) return {true, std::nullopt};
  return {false, "pair probability " + std::to_string(eta) +
                     " exceeds the single-pair validity limit 0.1; multi-pair terms are not modeled"};
}

}  // namespace sfwm
