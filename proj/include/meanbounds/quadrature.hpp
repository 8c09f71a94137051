#pragma once

#include <vector>

namespace meanbounds {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi]; nodes by Newton iteration on
/// P_n starting from the Chebyshev-like guess cos(pi (i - 1/4) / (n + 1/2)).
QuadratureRule gauss_legendre(int n, double lo, double hi);

}  // namespace meanbounds
