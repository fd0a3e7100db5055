#include "covariant/descent.hpp"

#include <algorithm>
#include <cmath>

#include "covariant/linalg.hpp"
#include "covariant/random.hpp"

namespace covariant {
namespace {

// Removes the component outside the kernel.
void project_to_kernel(Eigen::VectorXcd& d, const Eigen::MatrixXcd& complement) {
  if (complement.cols() > 0) d.noalias() -= complement * (complement.adjoint() * d);
}

}  // namespace

DescentResult kernel_l1_descent(const Eigen::VectorXcd& start, const Eigen::MatrixXcd& kernel_complement,
                                double group_weight, const DescentOptions& options) {
  const auto n = start.size();
  DescentResult result;
  result.best = group_weight * start.cwiseAbs().sum();
  result.evaluations = 1;
  if (n == 0 || kernel_complement.cols() >= n) return result;

  SplitMix64 rng(options.seed);
  const double reference = std::max(start.cwiseAbs().maxCoeff(), 1.0);
  Eigen::VectorXcd z(n), d(n), offset(n);

  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    z = start;
    double scale = reference * rng.unit();
    if (restart > 0) {
      for (Eigen::Index i = 0; i < n; ++i) d(i) = {rng.symmetric(), rng.symmetric()};
      project_to_kernel(d, kernel_complement);
      const double norm = d.cwiseAbs().maxCoeff();
      if (norm > 0.0) z += (scale / norm) * d;
    }
    const double step0 = 0.5 * std::max(scale, 0.05 * reference);
    for (std::size_t t = 0; t <= options.iterations; ++t) {
      const double value = group_weight * z.cwiseAbs().sum();
      ++result.evaluations;
      result.best = std::min(result.best, value);
      if (t == options.iterations) break;
      // Subgradient of sum |z_i|: z_i / |z_i| away from zero.
      for (Eigen::Index i = 0; i < n; ++i) {
        const double m = std::abs(z(i));
        d(i) = m > 1e-300 ? z(i) / m : std::complex<double>(0.0);
      }
      const double raw = d.norm();
      project_to_kernel(d, kernel_complement);
      const double norm = d.norm();
      // A vanishing projection means a kink point is optimal along the
      // kernel; normalizing the leftover rounding noise would step off the
      // coset.
      if (norm <= 1e-9 * raw) break;
      z -= (step0 / std::sqrt(static_cast<double>(t) + 1.0) / norm) * d;
      offset = z - start;
      project_to_kernel(offset, kernel_complement);
      z = start + offset;
    }
  }
  return result;
}

DescentResult kernel_l1_descent(const CovariantSpace& space, const GroupFunction& start,
                                const DescentOptions& options) {
  const Eigen::MatrixXcd complement = linalg::column_space(space.representative_matrix().adjoint());
  return kernel_l1_descent(start.values(), complement, space.haar().u(), options);
}

}  // namespace covariant
