#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfwm/filtering.hpp"
#include "sfwm/joint_amplitude.hpp"
#include "sfwm/jta.hpp"

namespace sfwm {

/// Pairing of the two JTA factors in the pair-probability integral.
/// `conjugated` takes JTA*(T') JTA(T) and always yields a real, nonnegative
/// probability. `as_printed` multiplies the factors without conjugation and
/// reports the real part; it exists for comparison only.
enum class EtaConvention { conjugated, as_printed };

/// Quadrature result plus a warning when halving the resolution moved the
/// value by more than 1e-6 relative.
struct QuadratureEstimate {
  double value = 0.0;
  std::optional<std::string> warning;
};

/// Probability of a filtered pair per pump pulse,
///   eta = (1/8pi^2) iint JTA*(T'/sqrt2) JTA(T/sqrt2) O_s(T-T') O_i(T-T') dT' dT,
/// by 2-D trapezoid quadrature on the JTA grid. With one side unfiltered this
/// dispatches to single_sided_eta.
QuadratureEstimate pair_probability(const DiagonalJTA& jta, const FilterPair& filters,
                                    EtaConvention convention = EtaConvention::conjugated);

/// Linear-model closed form phi^2 / (2 sqrt2) / sqrt(lambda^2 + mu^2 + 2 lambda^2 mu^2).
double gaussian_eta(double phi_max, double lambda, double mu);

struct SchmidtDecomposition {
  double purity = 0.0;
  /// Nonincreasing, normalized so that the squares sum to one.
  std::vector<double> weights;

  /// Fewest leading modes whose squared weights reach `fraction`.
  std::size_t modes_capturing(double fraction) const;
};

/// Heralded purity sum g_k^4 from the singular values of the sampled
/// amplitude. Singular values below 1e-14 of the largest are dropped.
SchmidtDecomposition purity_schmidt(const JointAmplitudeMatrix& amplitude);

/// Heralded purity from the four-fold overlap-kernel integral over the
/// filter-function basis. Both filters must be Gaussian. Grids above 128
/// points are refused unless `allow_large_grid` is set.
double purity_quadrature(const DiagonalJTA& jta, const FilterPair& filters, bool allow_large_grid = false);

/// Linear-model closed form sqrt(1 - 1 / ((1 + 2 lambda^2)(1 + 2 mu^2))).
double gaussian_purity(double lambda, double mu);

/// eta(lambda, mu) / eta(lambda, 0): the fraction of heralds whose partner
/// survives the idler filter. The signal (herald) filter must be Gaussian.
double heralding_efficiency(const DiagonalJTA& jta, const FilterPair& filters);

/// Linear-model closed form lambda / sqrt(lambda^2 + mu^2 + 2 lambda^2 mu^2).
double gaussian_heralding_efficiency(double lambda, double mu);

/// Purity when only the herald is filtered. Depends on |JTA| alone:
///   P = (2 sqrt2 pi eta)^-2 iint |JTA(T/sqrt2)|^2 |JTA(T'/sqrt2)|^2 |O(T-T')|^2
double single_sided_purity(const DiagonalJTA& jta, const FilterSpec& herald_filter);

/// Pair probability when only the herald is filtered:
///   eta = O(0) / (2 sqrt2 pi) int |JTA(T/sqrt2)|^2 dT
double single_sided_eta(const DiagonalJTA& jta, const FilterSpec& herald_filter);

struct LowExcitation {
  bool ok = true;
  std::optional<std::string> annotation;
};

/// The single-pair truncation holds for eta <= 0.1 (inclusive).
LowExcitation validate_low_excitation(double eta);

struct PairMetrics {
  double eta = 0.0;
  double purity = 0.0;
  std::optional<double> nu;
  std::vector<double> schmidt_weights;
  bool low_excitation_ok = true;
};

}  // namespace sfwm
