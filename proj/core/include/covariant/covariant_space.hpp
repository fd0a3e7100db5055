#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "covariant/characters.hpp"
#include "covariant/group.hpp"
#include "covariant/haar.hpp"

namespace covariant {

/// Residual bound for the covariance law psi(xk) = xi(k) psi(x).
inline constexpr double kCovarianceTolerance = 1e-9;

/// A complex function on a finite group, f(x) = values()[x].
class GroupFunction {
 public:
  /// Throws DomainMismatch unless `values` has one finite entry per element.
  GroupFunction(GroupPtr group, Eigen::VectorXcd values);

  static GroupFunction zero(GroupPtr group);
  static GroupFunction delta(GroupPtr group, Element x);
  static GroupFunction constant(GroupPtr group, std::complex<double> c);

  const GroupPtr& group_ptr() const noexcept { return group_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  const Eigen::VectorXcd& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(values_.size()); }
  std::complex<double> operator()(Element x) const { return values_(x); }

  GroupFunction operator+(const GroupFunction& other) const;
  GroupFunction operator-(const GroupFunction& other) const;
  GroupFunction operator*(std::complex<double> c) const;

 private:
  GroupPtr group_;
  Eigen::VectorXcd values_;
};

/// Throws DomainMismatch unless both functions live on the same group.
void require_same_group(const GroupFunction& f, const GroupFunction& g);

enum class Side { left, right };

/// left: z -> f(y^-1 z);  right: z -> f(z y).  Throws IndexOutOfRange.
GroupFunction translate(const GroupFunction& f, Side side, Element y);

/// sum_x u |f(x)|
double l1_norm(const GroupFunction& f, const HaarData& haar);

/// <f, g> = sum_x u f(x) conj(g(x))
std::complex<double> pairing(const GroupFunction& f, const GroupFunction& g, const HaarData& haar);

/// A function satisfying psi(xk) = xi(k) psi(x) for x in G, k in N. In the
/// finite setting the continuous, L^1 and L^infinity covariant spaces all
/// coincide as sets, so this one type stands for each of them.
class CovariantFunction {
 public:
  /// Throws NotCovariant when the covariance residual exceeds
  /// kCovarianceTolerance or |psi| is not constant on cosets.
  CovariantFunction(GroupFunction underlying, Character xi);

  const GroupFunction& underlying() const noexcept { return underlying_; }
  const Character& character() const noexcept { return xi_; }
  double covariance_residual() const noexcept { return residual_; }
  std::complex<double> operator()(Element x) const { return underlying_(x); }

 private:
  GroupFunction underlying_;
  Character xi_;
  double residual_;
};

/// max over (x, k) of |psi(xk) - xi(k) psi(x)|.
double covariance_residual(const GroupFunction& psi, const Character& xi);

/// Orthonormal basis of a subspace of functions on G. vectors() are
/// orthonormal for the lambda_G pairing; euclidean() holds the same
/// directions with unit Euclidean norm.
class SubspaceBasis {
 public:
  SubspaceBasis(GroupPtr group, Eigen::MatrixXcd euclidean_orthonormal, double u);

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
  const Eigen::MatrixXcd& euclidean() const noexcept { return basis_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  double group_weight() const noexcept { return u_; }

  GroupFunction vector(std::size_t i) const;
  std::vector<GroupFunction> vectors() const;

  /// max |<e_i, e_j> - delta_ij| under the lambda_G pairing.
  double gram_residual() const;
  /// Euclidean distance from f to the subspace.
  double distance(const GroupFunction& f) const;

 private:
  GroupPtr group_;
  Eigen::MatrixXcd basis_;
  double u_;
};

/// Containment both ways (mutual projection residual).
double subspace_match_residual(const SubspaceBasis& a, const SubspaceBasis& b);

/// Result of span_translates_basis: the span of R_k f - Delta_N(k^-1) xi(k) f.
struct TranslateSpan {
  SubspaceBasis basis;
  /// max |T_xi(generator)| over all generators.
  double containment_residual;
  /// Mutual projection residual against kernel_basis().
  double kernel_match_residual;
  bool equals_kernel;
};

/// T_xi and the objects built from it for one (G, N, xi, Haar weights).
/// Holds the coset decomposition so repeated evaluations stay cheap.
class CovariantSpace {
 public:
  /// Throws NotNormal unless xi's domain is normal in its parent group.
  CovariantSpace(Character xi, HaarData haar);

  const GroupPtr& group_ptr() const noexcept { return xi_.domain().parent(); }
  const FiniteGroup& group() const noexcept { return xi_.domain().group(); }
  const Subgroup& subgroup() const noexcept { return xi_.domain(); }
  const Character& character() const noexcept { return xi_; }
  const HaarData& haar() const noexcept { return haar_; }
  const CosetDecomposition& cosets() const noexcept { return cosets_; }

  /// T_xi(f)(x) = v sum_{s in N} f(xs) conj(xi(s)), without the covariance
  /// validation (usable with broken characters).
  GroupFunction apply(const GroupFunction& f) const;
  /// Same, validated. Throws DomainMismatch, NotCovariant.
  CovariantFunction t_xi(const GroupFunction& f) const;
  /// T_N(f)(xN) = v sum_{s in N} f(xs), indexed by coset.
  Eigen::VectorXcd t_n(const GroupFunction& f) const;

  /// ||psi||_(1) = sum over cosets of w |psi(rep)|.
  double norm_one(const CovariantFunction& psi) const;

  CovariantFunction make_covariant(GroupFunction psi) const;
  /// psi(rep_c s) = xi(s) values[c]; one value per coset.
  CovariantFunction extend_from_representatives(std::span<const std::complex<double>> values) const;

  /// g = psi h with h = (1/v) 1_{representatives}, so T_N(h) = 1,
  /// T_xi(g) = psi and ||g||_1 = ||psi||_(1).
  GroupFunction minimal_lift(const CovariantFunction& psi) const;

  /// inf { ||f + g||_1 : g in ker T_xi }, evaluated as ||T_xi f||_(1).
  double quotient_norm(const GroupFunction& f) const;

  /// |G| x |G| matrix of T_xi.
  Eigen::MatrixXcd operator_matrix() const;
  /// |G/N| x |G| matrix of f -> (T_xi f)(rep_c); covariance makes the
  /// representative values sufficient.
  Eigen::MatrixXcd representative_matrix() const;

  SubspaceBasis kernel_basis() const;
  /// Kernel of the full |G| x |G| operator matrix. In finite dimensions the
  /// L^1 closure of the kernel is the kernel itself, so this must match
  /// kernel_basis() exactly.
  SubspaceBasis closed_kernel_basis() const;
  TranslateSpan span_translates_basis() const;
  /// Solutions of R_k psi = xi(k) psi for every k in N.
  SubspaceBasis linfty_xi_basis() const;
  /// { g : <f, g> = 0 for every f in the given subspace }.
  SubspaceBasis annihilator_basis(const SubspaceBasis& kernel) const;

 private:
  void require_domain(const GroupFunction& f) const;

  Character xi_;
  HaarData haar_;
  CosetDecomposition cosets_;
  std::vector<std::complex<double>> conj_xi_;  // conj(xi(s)) by member position
};

/// Convenience wrappers over CovariantSpace.
CovariantFunction t_xi(const GroupFunction& f, const Character& xi, const HaarData& haar);
Eigen::VectorXcd t_n(const GroupFunction& f, const Subgroup& n, const HaarData& haar);

}  // namespace covariant
