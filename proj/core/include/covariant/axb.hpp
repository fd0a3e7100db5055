#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace covariant {

class SplitMix64;

/// The ax+b group: (a, b)(a', b') = (a a', b + a b'), a > 0.
/// N = {(1, s)} is normal and G/N is (0, inf) under multiplication.
struct AxbPoint {
  double a = 1.0;
  double b = 0.0;

  /// Throws ParameterOutOfRange unless a is finite and positive and b finite.
  static AxbPoint make(double a, double b);
  static AxbPoint translation(double s) { return {1.0, s}; }
};

AxbPoint operator*(const AxbPoint& x, const AxbPoint& y) noexcept;
AxbPoint inverse(const AxbPoint& x) noexcept;

/// Box bounds and node counts for the tensor Gauss-Legendre grid.
struct GridSpec {
  double a_min = 0.125;
  double a_max = 8.0;
  double b_bound = 16.0;
  std::size_t a_nodes = 128;
  std::size_t b_nodes = 128;
};

inline constexpr double kBoxTolerance = 1e-10;

/// Tensor grid on [a_min, a_max] x [-B, B]. The a-rule is Gauss-Legendre in
/// log a; a_weights() already carry the Jacobian, so sum w_i g(a_i)
/// approximates the da integral. Together they realize
/// lambda_G = a^-2 da db, lambda_N = db and lambda_{G/N} = da / a.
class QuadratureGrid {
 public:
  /// Throws ParameterOutOfRange on a bad box, GridTooCoarse if the box
  /// measure check fails.
  static QuadratureGrid make(const GridSpec& spec = {});

  const GridSpec& spec() const noexcept { return spec_; }
  const std::vector<double>& a_nodes() const noexcept { return a_nodes_; }
  const std::vector<double>& a_weights() const noexcept { return a_weights_; }
  const std::vector<double>& b_nodes() const noexcept { return b_nodes_; }
  const std::vector<double>& b_weights() const noexcept { return b_weights_; }

  /// Exact lambda_G of the box: (1/a_min - 1/a_max) * 2B.
  double box_measure() const noexcept;
  /// |quadrature of 1 over the box - box_measure()|.
  double box_residual() const noexcept { return box_residual_; }

 private:
  QuadratureGrid() = default;

  GridSpec spec_;
  std::vector<double> a_nodes_, a_weights_, b_nodes_, b_weights_;
  double box_residual_ = 0.0;
};

/// A smooth function on the ax+b group, effectively supported in the box.
class AxbFunction {
 public:
  using Evaluator = std::function<std::complex<double>(double a, double b)>;

  AxbFunction(Evaluator evaluator, double bound, std::string name = "f");

  std::complex<double> operator()(double a, double b) const { return evaluator_(a, b); }
  std::complex<double> operator()(const AxbPoint& x) const { return evaluator_(x.a, x.b); }
  double bound() const noexcept { return bound_; }
  const std::string& name() const noexcept { return name_; }

  AxbFunction scaled(std::complex<double> c) const;

 private:
  Evaluator evaluator_;
  double bound_;
  std::string name_;
};

/// z -> f(y^-1 z)
AxbFunction left_translate(const AxbFunction& f, AxbPoint y);
/// z -> f(z y)
AxbFunction right_translate(const AxbFunction& f, AxbPoint y);

/// amplitude * exp(-(ln a - log_center)^2 / (2 log_width^2))
///           * exp(-(b - b_center)^2 / (2 b_width^2)) * exp(i b_frequency b)
struct GaussianParams {
  double log_center = 0.0;
  double log_width = 0.2;
  double b_center = 0.0;
  double b_width = 1.0;
  double b_frequency = 0.0;
  std::complex<double> amplitude = 1.0;
};

AxbFunction gaussian(const GaussianParams& p);

/// A random member of the shipped test family, centered well inside the
/// default box.
GaussianParams random_gaussian(SplitMix64& rng);

/// Exact integral over the whole group against a^-2 da db.
std::complex<double> gaussian_group_integral(const GaussianParams& p);
/// Exact T_xi of a Gaussian at x for the character xi_omega.
std::complex<double> gaussian_t_xi(const GaussianParams& p, double omega, AxbPoint x);

/// Largest |f| on the box boundary. Throws TruncationLeak above 1e-12.
double require_hygiene(const AxbFunction& f, const QuadratureGrid& grid);

inline constexpr double kHygieneBound = 1e-12;

/// T_xi f(x) for xi_omega(1, s) = exp(i omega s), using the convention
/// conj(xi_omega)(s) = exp(-i omega s):
///   T_xi f(a, b) = int f(a, b + a s) exp(-i omega s) ds
///                = (1/a) int f(a, t) exp(-i omega (t - b) / a) dt.
/// Throws GridTooCoarse when |omega| B / a exceeds the b node count.
std::complex<double> t_xi_axb(const AxbFunction& f, double omega, AxbPoint x, const QuadratureGrid& grid);

/// T_N f(a) = (1/a) int f(a, t) dt, the omega = 0 case.
std::complex<double> t_n_axb(const AxbFunction& f, double a, const QuadratureGrid& grid);

/// Throws GridTooCoarse unless the grid resolves exp(-i omega t / a) for
/// every a >= a_lowest.
void require_resolution(double omega, double a_lowest, const QuadratureGrid& grid);

/// int f dlambda_G by quadrature.
std::complex<double> integrate_group(const AxbFunction& f, const QuadratureGrid& grid);

struct WeilCheck {
  std::complex<double> quotient_side;  // int_{G/N} T_N f d lambda_{G/N}
  std::complex<double> group_side;     // int_G f d lambda_G
  double residual;
};

/// Throws TruncationLeak, GridTooCoarse.
WeilCheck weil_check_axb(const AxbFunction& f, const QuadratureGrid& grid);

struct SigmaCheck {
  double sigma;           // measured sigma_N(x)
  double delta_group;     // measured Delta_G(x)
  double delta_quotient;  // measured Delta_{G/N}(xN)
  /// max(|sigma - 1/a|, |Delta_G - sigma Delta_{G/N}|, |Delta_G - 1/a|)
  double residual;
};

/// sigma_N(x), Delta_G(x) and Delta_{G/N}(xN) by their defining quotients.
/// Throws GridTooCoarse, TruncationLeak.
SigmaCheck sigma_check_axb(AxbPoint x, const QuadratureGrid& grid);

/// sigma_G(alpha) for alpha(a, b) = (a, c b), by the defining quotient.
/// Throws ParameterOutOfRange for c = 0.
double haar_modulus_axb(double c, const QuadratureGrid& grid);

/// f sampled on the grid, rows a_i, columns b_j.
Eigen::MatrixXcd sample_on_grid(const AxbFunction& f, const QuadratureGrid& grid);

/// Row i holds T_xi f at (a_i, b_j) for all b_j.
Eigen::MatrixXcd t_xi_on_grid(const AxbFunction& f, double omega, const QuadratureGrid& grid);

/// <f, g> = int f conj(g) dlambda_G for grid samples.
std::complex<double> pairing_on_grid(const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& g,
                                     const QuadratureGrid& grid);

struct ContractionCheck {
  double covariant_norm;  // ||T_xi f||_(1) over G/N
  double l1_norm;         // ||f||_1 over G
};

ContractionCheck contraction_axb(const AxbFunction& f, double omega, const QuadratureGrid& grid);

}  // namespace covariant
