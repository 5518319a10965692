#pragma once

#include <vector>

namespace sfwm {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes are found by Newton iteration on P_n from Chebyshev initial guesses;
/// accurate to a few ulp for orders up to several thousand.
GaussLegendreRule gauss_legendre(int order);

}  // namespace sfwm
