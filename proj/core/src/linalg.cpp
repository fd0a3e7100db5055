#include "covariant/linalg.hpp"

#include <algorithm>

namespace covariant::linalg {
namespace {

Eigen::Index numerical_rank(const Eigen::VectorXd& singular, double relative_cutoff) {
  if (singular.size() == 0 || singular(0) == 0.0) return 0;
  const double threshold = relative_cutoff * singular(0);
  Eigen::Index r = 0;
  while (r < singular.size() && singular(r) > threshold) ++r;
  return r;
}

}  // namespace

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& a, double relative_cutoff) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0 || n == 0) return Eigen::MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const Eigen::Index r = numerical_rank(svd.singularValues(), relative_cutoff);
  return svd.matrixV().rightCols(n - r);
}

Eigen::MatrixXcd column_space(const Eigen::MatrixXcd& a, double relative_cutoff) {
  if (a.rows() == 0 || a.cols() == 0) return Eigen::MatrixXcd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU);
  const Eigen::Index r = numerical_rank(svd.singularValues(), relative_cutoff);
  return svd.matrixU().leftCols(r);
}

double containment_residual(const Eigen::MatrixXcd& sub, const Eigen::MatrixXcd& super) {
  double worst = 0.0;
  for (Eigen::Index j = 0; j < sub.cols(); ++j) {
    Eigen::VectorXcd q = sub.col(j);
    if (super.cols() > 0) q -= super * (super.adjoint() * q);
    worst = std::max(worst, q.norm());
  }
  return worst;
}

double match_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return std::max(containment_residual(a, b), containment_residual(b, a));
}

double orthonormality_residual(const Eigen::MatrixXcd& q) {
  if (q.cols() == 0) return 0.0;
  const Eigen::MatrixXcd gram = q.adjoint() * q;
  return (gram - Eigen::MatrixXcd::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

}  // namespace covariant::linalg
