#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include <gtest/gtest.h>

#include "covariant/axb.hpp"
#include "covariant/errors.hpp"
#include "covariant/quadrature.hpp"
#include "covariant/random.hpp"
#include "covariant/verifier.hpp"

using namespace covariant;

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

const QuadratureGrid& default_grid() {
  static const QuadratureGrid grid = QuadratureGrid::make();
  return grid;
}

/// Independent oracle for T_xi f(a, b) = int f(a, b + a s) exp(-i omega s) ds:
/// composite Simpson on a wide uniform s-grid, no Gauss-Legendre involved.
std::complex<double> simpson_t_xi(const AxbFunction& f, double omega, AxbPoint x) {
  const double half_width = 40.0 / x.a;
  const int panels = 40000;
  const double h = 2.0 * half_width / panels;
  std::complex<double> acc = 0.0;
  for (int k = 0; k <= panels; ++k) {
    const double s = -half_width + k * h;
    const double weight = (k == 0 || k == panels) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    acc += weight * f(x.a, x.b + x.a * s) * std::exp(-kI * (omega * s));
  }
  return acc * h / 3.0;
}

}  // namespace

TEST(AxbGroup, Axioms) {
  const AxbPoint x{2.0, 1.0}, y{0.5, -3.0}, z{3.0, 0.25};
  const AxbPoint xy_z = (x * y) * z, x_yz = x * (y * z);
  EXPECT_DOUBLE_EQ(xy_z.a, x_yz.a);
  EXPECT_DOUBLE_EQ(xy_z.b, x_yz.b);
  const AxbPoint e = x * inverse(x);
  EXPECT_DOUBLE_EQ(e.a, 1.0);
  EXPECT_DOUBLE_EQ(e.b, 0.0);
  const AxbPoint p = x * y;
  EXPECT_DOUBLE_EQ(p.a, 1.0);
  EXPECT_DOUBLE_EQ(p.b, 1.0 + 2.0 * -3.0);
  // Conjugating a translation by (a, b) scales it by 1/a.
  const AxbPoint c = inverse(x) * AxbPoint::translation(4.0) * x;
  EXPECT_DOUBLE_EQ(c.a, 1.0);
  EXPECT_DOUBLE_EQ(c.b, 2.0);
  EXPECT_THROW(AxbPoint::make(0.0, 1.0), ParameterOutOfRange);
  EXPECT_THROW(AxbPoint::make(1.0, std::nan("")), ParameterOutOfRange);
}

TEST(Quadrature, GaussLegendre) {
  const GaussLegendreRule two = gauss_legendre(2);
  EXPECT_NEAR(two.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(two.weights[1], 1.0, 1e-15);
  for (std::size_t n : {5u, 16u, 64u}) {
    const GaussLegendreRule r = gauss_legendre(n, 0.0, 2.0);
    EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 2.0, 1e-13);
    double moment = 0.0;
    for (std::size_t i = 0; i < n; ++i) moment += r.weights[i] * std::pow(r.nodes[i], 2 * n - 1);
    EXPECT_NEAR(moment / (std::pow(2.0, 2 * n) / (2 * n)), 1.0, 1e-12) << n;
  }
  EXPECT_THROW(gauss_legendre(0), ParameterOutOfRange);
  EXPECT_THROW(gauss_legendre(4, 1.0, 1.0), ParameterOutOfRange);
}

TEST(Quadrature, GridMeasuresTheBox) {
  const QuadratureGrid& grid = default_grid();
  EXPECT_LE(grid.box_residual(), kBoxTolerance);
  EXPECT_DOUBLE_EQ(grid.box_measure(), (8.0 - 0.125) * 32.0);
  EXPECT_THROW(QuadratureGrid::make({.a_min = 2.0, .a_max = 1.0}), ParameterOutOfRange);
  EXPECT_THROW(QuadratureGrid::make({.a_nodes = 4, .b_nodes = 4}), GridTooCoarse);
}

TEST(Axb, ClosedFormTXi) {
  const AxbFunction f = gaussian({});
  for (double omega : {0.0, 0.5, 1.0, -1.0})
    for (const AxbPoint x : {AxbPoint{1.0, 0.0}, AxbPoint{1.5, 1.0}, AxbPoint{0.8, -2.0}}) {
      const std::complex<double> phi = std::exp(-std::pow(std::log(x.a), 2) / (2 * 0.04));
      const std::complex<double> expected = phi * std::sqrt(2 * std::numbers::pi) / x.a *
                                            std::exp(-omega * omega / (2 * x.a * x.a)) *
                                            std::exp(kI * (omega * x.b / x.a));
      EXPECT_LT(std::abs(gaussian_t_xi({}, omega, x) - expected), 1e-14);
      EXPECT_LT(std::abs(t_xi_axb(f, omega, x, default_grid()) - expected), 1e-6);
      EXPECT_LT(std::abs(simpson_t_xi(f, omega, x) - expected), 1e-9);
    }
}

TEST(Axb, TXiMatchesIndependentOracleOnRandomGaussians) {
  SplitMix64 rng(21);
  for (int t = 0; t < 10; ++t) {
    const GaussianParams p = random_gaussian(rng);
    const AxbFunction f = gaussian(p);
    const AxbPoint x{std::exp(0.4 * rng.symmetric()), 2.0 * rng.symmetric()};
    EXPECT_LT(std::abs(t_xi_axb(f, 1.0, x, default_grid()) - simpson_t_xi(f, 1.0, x)), 1e-8);
    EXPECT_LT(std::abs(gaussian_t_xi(p, 1.0, x) - simpson_t_xi(f, 1.0, x)), 1e-8);
  }
}

TEST(Axb, ZeroFrequencyIsTN) {
  SplitMix64 rng(5);
  const AxbFunction f = gaussian(random_gaussian(rng));
  for (double a : {0.7, 1.0, 1.9}) {
    EXPECT_LT(std::abs(t_xi_axb(f, 0.0, {a, 0.0}, default_grid()) - t_n_axb(f, a, default_grid())), 1e-14);
    EXPECT_LT(std::abs(t_n_axb(f, a, default_grid()) - simpson_t_xi(f, 0.0, {a, 0.0})), 1e-9);
  }
  const AxbFunction zero([](double, double) { return std::complex<double>(0.0); }, 0.0, "zero");
  EXPECT_EQ(t_xi_axb(zero, 1.0, {1.0, 0.0}, default_grid()), std::complex<double>(0.0));
}

TEST(Axb, WeilFormula) {
  SplitMix64 rng(8);
  for (int t = 0; t < 5; ++t) {
    const GaussianParams p = random_gaussian(rng);
    const WeilCheck r = weil_check_axb(gaussian(p), default_grid());
    EXPECT_LE(r.residual, 1e-6);
    EXPECT_LT(std::abs(r.group_side - gaussian_group_integral(p)), 1e-6);
    const WeilCheck doubled = weil_check_axb(gaussian(p).scaled(2.0), default_grid());
    EXPECT_LE(doubled.residual, 2.0 * r.residual + 1e-15);
  }
  const AxbFunction zero([](double, double) { return std::complex<double>(0.0); }, 0.0, "zero");
  EXPECT_EQ(weil_check_axb(zero, default_grid()).residual, 0.0);
}

TEST(Axb, SigmaAndModularFunctions) {
  EXPECT_NEAR(sigma_check_axb({2.0, 0.0}, default_grid()).sigma, 0.5, 1e-6);
  EXPECT_NEAR(sigma_check_axb({0.5, 0.0}, default_grid()).sigma, 2.0, 1e-6);
  EXPECT_NEAR(sigma_check_axb({3.0, 0.0}, default_grid()).sigma, 1.0 / 3.0, 1e-6);
  EXPECT_NEAR(sigma_check_axb({1.0, 5.0}, default_grid()).sigma, 1.0, 1e-6);
  EXPECT_NEAR(sigma_check_axb(AxbPoint{2.0, 0.0} * AxbPoint{3.0, 0.0}, default_grid()).sigma, 1.0 / 6.0, 1e-6);
  const SigmaCheck r = sigma_check_axb({2.0, 0.0}, default_grid());
  EXPECT_NEAR(r.delta_group, r.sigma * r.delta_quotient, 1e-6);
  EXPECT_LE(r.residual, 1e-6);
  EXPECT_NEAR(haar_modulus_axb(3.0, default_grid()), 3.0, 1e-6);
  EXPECT_THROW(haar_modulus_axb(0.0, default_grid()), ParameterOutOfRange);
}

TEST(Axb, Translations) {
  const AxbFunction f = gaussian({});
  const AxbPoint y{1.2, 0.5}, z{0.9, -0.2};
  EXPECT_EQ(left_translate(f, y)(z), f(inverse(y) * z));
  EXPECT_EQ(right_translate(f, y)(z), f(z * y));
}

TEST(Axb, Errors) {
  const AxbFunction wide = gaussian({.b_width = 10.0});
  EXPECT_THROW(require_hygiene(wide, default_grid()), TruncationLeak);
  EXPECT_THROW(weil_check_axb(wide, default_grid()), TruncationLeak);
  EXPECT_THROW(t_xi_axb(gaussian({}), 3.0, {0.125, 0.0}, default_grid()), GridTooCoarse);
  EXPECT_THROW(require_resolution(2.0, 0.125, default_grid()), GridTooCoarse);
  EXPECT_NO_THROW(require_resolution(1.0, 0.125, default_grid()));
  EXPECT_THROW(run_axb_suite({.omegas = {3.0}}), GridTooCoarse);
}

TEST(Axb, ContractionAndAdjointness) {
  SplitMix64 rng(13);
  const AxbFunction f = gaussian(random_gaussian(rng));
  const AxbFunction g = gaussian(random_gaussian(rng));
  const ContractionCheck c = contraction_axb(f, 1.0, default_grid());
  EXPECT_LE(c.covariant_norm, c.l1_norm + 1e-9);
  const QuadratureGrid& grid = default_grid();
  const auto lhs = pairing_on_grid(t_xi_on_grid(f, 1.0, grid), sample_on_grid(g, grid), grid);
  const auto rhs = pairing_on_grid(sample_on_grid(f, grid), t_xi_on_grid(g, 1.0, grid), grid);
  EXPECT_LT(std::abs(lhs - rhs), 1e-6);
}

TEST(Axb, SuitePasses) {
  const auto cases = run_axb_suite({.omegas = {1.0, 0.0}});
  ASSERT_EQ(cases.size(), 2u);
  for (const CaseReport& c : cases)
    for (const TheoremReport& r : c.theorems) EXPECT_TRUE(r.passed) << c.key.text() << " " << to_string(r.id);
}

TEST(Axb, RefinementConvergesAgainstClosedForms) {
  double previous = 0.0;
  for (std::size_t nodes : {16u, 32u, 64u, 128u}) {
    const ClosedFormErrors e = closed_form_errors(QuadratureGrid::make({.a_nodes = nodes, .b_nodes = nodes}), 1.0);
    const double worst = std::max({e.weil, e.sigma, e.t_xi});
    if (nodes > 16) EXPECT_GE(previous, 4.0 * worst) << nodes;
    previous = worst;
  }
  EXPECT_LT(previous, 1e-6);
}
