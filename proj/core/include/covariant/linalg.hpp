#pragma once

#include <Eigen/Dense>

namespace covariant::linalg {

/// Singular values below this fraction of the largest count as zero.
inline constexpr double kRankCutoff = 1e-10;

/// Orthonormal basis (columns) of {x : A x = 0}, from the SVD of A.
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& a, double relative_cutoff = kRankCutoff);

/// Orthonormal basis (columns) of the range of A, from the SVD of A.
Eigen::MatrixXcd column_space(const Eigen::MatrixXcd& a, double relative_cutoff = kRankCutoff);

/// max_j || q_j - P q_j || over the columns of `sub`, where P projects onto
/// the span of the orthonormal columns of `super`.
double containment_residual(const Eigen::MatrixXcd& sub, const Eigen::MatrixXcd& super);

/// Containment both ways; zero iff the spans coincide.
double match_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// max |G_ij - delta_ij| for the Gram matrix of the columns.
double orthonormality_residual(const Eigen::MatrixXcd& q);

}  // namespace covariant::linalg
