#pragma once

#include <cstddef>
#include <vector>

namespace covariant {

struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi], nodes ascending. Throws
/// ParameterOutOfRange unless n >= 1 and lo < hi.
GaussLegendreRule gauss_legendre(std::size_t n, double lo = -1.0, double hi = 1.0);

}  // namespace covariant
