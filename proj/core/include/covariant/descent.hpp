#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "covariant/covariant_space.hpp"

namespace covariant {

struct DescentOptions {
  std::size_t restarts = 500;
  std::size_t iterations = 30;
  std::uint64_t seed = 0;
};

struct DescentResult {
  /// Smallest L^1 norm seen on the coset.
  double best = 0.0;
  std::size_t evaluations = 0;
};

/// Projected subgradient descent for min ||f + g||_1 over g in ker T_xi,
/// started from `start` (any point of the coset f + ker T_xi) plus random
/// kernel perturbations. Only a falsifier: it can expose a point below a
/// claimed infimum but never proves one.
DescentResult kernel_l1_descent(const CovariantSpace& space, const GroupFunction& start,
                                const DescentOptions& options);

/// Same, with the orthogonal complement of the kernel given directly as
/// orthonormal columns (Euclidean).
DescentResult kernel_l1_descent(const Eigen::VectorXcd& start, const Eigen::MatrixXcd& kernel_complement,
                                double group_weight, const DescentOptions& options);

}  // namespace covariant
