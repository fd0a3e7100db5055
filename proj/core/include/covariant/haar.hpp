#pragma once

#include <span>

#include "covariant/group.hpp"

namespace covariant {

/// Haar data for a finite group G with normal subgroup N:
///   lambda_G = u * counting, lambda_N = v * counting,
///   lambda_{G/N} = w * counting with w = u / v (Weil-normalized).
/// Haar measures on a group are uniform, so one scalar per measure is the
/// whole story.
class HaarData {
 public:
  /// Counting measures, u = v = w = 1.
  HaarData() = default;

  double group_weight() const noexcept { return u_; }
  double subgroup_weight() const noexcept { return v_; }
  double quotient_weight() const noexcept { return w_; }

  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }
  double w() const noexcept { return w_; }

  friend bool operator==(const HaarData&, const HaarData&) = default;

 private:
  friend HaarData weil_normalize(double u, double v);
  HaarData(double u, double v) : u_(u), v_(v), w_(u / v) {}

  double u_ = 1.0;
  double v_ = 1.0;
  double w_ = 1.0;
};

/// Throws NonPositiveWeight unless u, v are finite and positive.
HaarData weil_normalize(double u, double v);

/// Probability measure on N: v = 1 / |N|, so w = u * |N|.
HaarData probability_on_subgroup(double u, std::size_t subgroup_order);

// The functions below evaluate the defining integral quotients on the
// counting measures above. On finite groups each returns 1; computing them
// rather than hard-coding 1 keeps them honest regression checks.

/// Delta_G(x) from  int f dlambda_G = Delta_G(x) int R_x f dlambda_G.
double modular_function(const FiniteGroup& g, const HaarData& haar, Element x);

/// Delta_{G/N}(c) for a coset index c, using lambda_{G/N}.
double quotient_modular_function(const CosetDecomposition& d, const HaarData& haar, Element coset);

/// Delta_N(s) for s in N, using lambda_N. Throws NotInDomain.
double subgroup_modular_function(const Subgroup& n, const HaarData& haar, Element s);

/// sigma_N(x) from  int_N v(s) dlambda_N(x^-1 s x) = sigma_N(x) int_N v dlambda_N,
/// with the left side computed as a pushforward sum. Throws NotNormal.
double sigma_n(const Subgroup& n, const HaarData& haar, Element x);

/// Throws NotAnAutomorphism (with the violating pair) unless `alpha` is a
/// product-preserving permutation of G.
void require_automorphism(const FiniteGroup& g, std::span<const Element> alpha);

/// sigma_G(alpha) from  int f dlambda_G = sigma_G(alpha) int f o alpha dlambda_G.
double haar_modulus(const FiniteGroup& g, std::span<const Element> alpha,
                    const HaarData& haar = {});

/// The inner automorphism s -> x^-1 s x as a permutation.
std::vector<Element> inner_automorphism(const FiniteGroup& g, Element x);

}  // namespace covariant
