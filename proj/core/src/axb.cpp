#include "covariant/axb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "covariant/errors.hpp"
#include "covariant/quadrature.hpp"
#include "covariant/random.hpp"

namespace covariant {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};
const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

std::string point_text(double a, double b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void require_nodes(const QuadratureGrid& grid, const char* what) {
  if (grid.spec().a_nodes < 4 || grid.spec().b_nodes < 4) {
    throw GridTooCoarse(std::string(what) + " needs at least 4 nodes per axis");
  }
}

// Ratio int p dmu / int p∘shift dmu on one axis of the grid.
double axis_ratio(const std::vector<double>& nodes, const std::vector<double>& weights,
                  const std::function<double(double)>& plain, const std::function<double(double)>& moved) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    num += weights[i] * plain(nodes[i]);
    den += weights[i] * moved(nodes[i]);
  }
  return num / den;
}

}  // namespace

AxbPoint AxbPoint::make(double a, double b) {
  if (!(std::isfinite(a) && a > 0.0)) throw ParameterOutOfRange("ax+b dilation must be positive; got " + std::to_string(a));
  if (!std::isfinite(b)) throw ParameterOutOfRange("ax+b translation must be finite");
  return {a, b};
}

AxbPoint operator*(const AxbPoint& x, const AxbPoint& y) noexcept { return {x.a * y.a, x.b + x.a * y.b}; }

AxbPoint inverse(const AxbPoint& x) noexcept { return {1.0 / x.a, -x.b / x.a}; }

// ---------------------------------------------------------------------------

QuadratureGrid QuadratureGrid::make(const GridSpec& spec) {
  if (!(spec.a_min > 0.0 && spec.a_max > spec.a_min && std::isfinite(spec.a_max))) {
    throw ParameterOutOfRange("need 0 < a_min < a_max; got [" + std::to_string(spec.a_min) + ", " +
                              std::to_string(spec.a_max) + "]");
  }
  if (!(spec.b_bound > 0.0 && std::isfinite(spec.b_bound))) {
    throw ParameterOutOfRange("b bound must be positive; got " + std::to_string(spec.b_bound));
  }
  if (spec.a_nodes == 0 || spec.b_nodes == 0) throw ParameterOutOfRange("node counts must be positive");

  QuadratureGrid grid;
  grid.spec_ = spec;
  const auto log_rule = gauss_legendre(spec.a_nodes, std::log(spec.a_min), std::log(spec.a_max));
  for (std::size_t i = 0; i < spec.a_nodes; ++i) {
    const double a = std::exp(log_rule.nodes[i]);
    grid.a_nodes_.push_back(a);
    grid.a_weights_.push_back(a * log_rule.weights[i]);
  }
  auto b_rule = gauss_legendre(spec.b_nodes, -spec.b_bound, spec.b_bound);
  grid.b_nodes_ = std::move(b_rule.nodes);
  grid.b_weights_ = std::move(b_rule.weights);

  double a_part = 0.0, b_part = 0.0;
  for (std::size_t i = 0; i < spec.a_nodes; ++i) a_part += grid.a_weights_[i] / (grid.a_nodes_[i] * grid.a_nodes_[i]);
  for (double w : grid.b_weights_) b_part += w;
  grid.box_residual_ = std::abs(a_part * b_part - grid.box_measure());
  if (grid.box_residual_ > kBoxTolerance) {
    throw GridTooCoarse("box measure off by " + std::to_string(grid.box_residual_));
  }
  return grid;
}

double QuadratureGrid::box_measure() const noexcept {
  return (1.0 / spec_.a_min - 1.0 / spec_.a_max) * 2.0 * spec_.b_bound;
}

// ---------------------------------------------------------------------------

AxbFunction::AxbFunction(Evaluator evaluator, double bound, std::string name)
    : evaluator_(std::move(evaluator)), bound_(bound), name_(std::move(name)) {}

AxbFunction AxbFunction::scaled(std::complex<double> c) const {
  auto inner = evaluator_;
  return {[inner, c](double a, double b) { return c * inner(a, b); }, std::abs(c) * bound_, name_};
}

AxbFunction left_translate(const AxbFunction& f, AxbPoint y) {
  const AxbPoint y_inv = inverse(y);
  return {[f, y_inv](double a, double b) { return f(y_inv * AxbPoint{a, b}); }, f.bound(), "L" + f.name()};
}

AxbFunction right_translate(const AxbFunction& f, AxbPoint y) {
  return {[f, y](double a, double b) { return f(AxbPoint{a, b} * y); }, f.bound(), "R" + f.name()};
}

AxbFunction gaussian(const GaussianParams& p) {
  if (!(p.log_width > 0.0 && p.b_width > 0.0)) throw ParameterOutOfRange("Gaussian widths must be positive");
  return {[p](double a, double b) {
            const double la = (std::log(a) - p.log_center) / p.log_width;
            const double lb = (b - p.b_center) / p.b_width;
            return p.amplitude * std::exp(-0.5 * (la * la + lb * lb)) * std::exp(kI * (p.b_frequency * b));
          },
          std::abs(p.amplitude), "gaussian"};
}

GaussianParams random_gaussian(SplitMix64& rng) {
  GaussianParams p;
  p.log_center = 0.3 * rng.symmetric();
  p.log_width = 0.2;
  p.b_center = 3.0 * rng.symmetric();
  p.b_width = 1.0 + 0.2 * rng.symmetric();
  p.b_frequency = 0.5 * rng.symmetric();
  const double re = rng.symmetric();
  p.amplitude = {re, rng.symmetric()};
  return p;
}

std::complex<double> gaussian_group_integral(const GaussianParams& p) {
  // int exp(-(t - mu)^2 / 2s^2) e^{-t} dt with t = ln a, da / a^2 = e^{-t} dt.
  const double s = p.log_width;
  const double a_part = s * kSqrt2Pi * std::exp(0.5 * s * s - p.log_center);
  const double tau = p.b_width, k = p.b_frequency;
  const std::complex<double> b_part =
      tau * kSqrt2Pi * std::exp(kI * (k * p.b_center)) * std::exp(-0.5 * tau * tau * k * k);
  return p.amplitude * a_part * b_part;
}

std::complex<double> gaussian_t_xi(const GaussianParams& p, double omega, AxbPoint x) {
  const double la = (std::log(x.a) - p.log_center) / p.log_width;
  const double tau = p.b_width;
  const double nu = p.b_frequency - omega / x.a;
  const std::complex<double> b_part =
      tau * kSqrt2Pi * std::exp(kI * (nu * p.b_center)) * std::exp(-0.5 * tau * tau * nu * nu);
  return p.amplitude * std::exp(-0.5 * la * la) * b_part * std::exp(kI * (omega * x.b / x.a)) / x.a;
}

double require_hygiene(const AxbFunction& f, const QuadratureGrid& grid) {
  const GridSpec& s = grid.spec();
  double worst = 0.0;
  double wa = 0.0, wb = 0.0;
  auto probe = [&](double a, double b) {
    const double m = std::abs(f(a, b));
    if (m > worst) worst = m, wa = a, wb = b;
  };
  for (double b : grid.b_nodes()) {
    probe(s.a_min, b);
    probe(s.a_max, b);
  }
  for (double a : grid.a_nodes()) {
    probe(a, -s.b_bound);
    probe(a, s.b_bound);
  }
  if (!(worst < kHygieneBound)) {
    throw TruncationLeak(f.name() + " reaches " + std::to_string(worst) + " on the box boundary at " +
                         point_text(wa, wb));
  }
  return worst;
}

void require_resolution(double omega, double a_lowest, const QuadratureGrid& grid) {
  const double demand = std::abs(omega) * grid.spec().b_bound / a_lowest;
  if (demand > static_cast<double>(grid.spec().b_nodes)) {
    throw GridTooCoarse("omega = " + std::to_string(omega) + " at a = " + std::to_string(a_lowest) + " needs " +
                        std::to_string(static_cast<std::size_t>(std::ceil(demand))) + " b nodes, grid has " +
                        std::to_string(grid.spec().b_nodes));
  }
}

std::complex<double> t_xi_axb(const AxbFunction& f, double omega, AxbPoint x, const QuadratureGrid& grid) {
  x = AxbPoint::make(x.a, x.b);
  require_resolution(omega, x.a, grid);
  const auto& t = grid.b_nodes();
  const auto& w = grid.b_weights();
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    acc += w[k] * f(x.a, t[k]) * std::exp(-kI * (omega * (t[k] - x.b) / x.a));
  }
  return acc / x.a;
}

std::complex<double> t_n_axb(const AxbFunction& f, double a, const QuadratureGrid& grid) {
  return t_xi_axb(f, 0.0, AxbPoint{a, 0.0}, grid);
}

std::complex<double> integrate_group(const AxbFunction& f, const QuadratureGrid& grid) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < grid.a_nodes().size(); ++i) {
    const double a = grid.a_nodes()[i];
    std::complex<double> row = 0.0;
    for (std::size_t j = 0; j < grid.b_nodes().size(); ++j) row += grid.b_weights()[j] * f(a, grid.b_nodes()[j]);
    acc += grid.a_weights()[i] / (a * a) * row;
  }
  return acc;
}

WeilCheck weil_check_axb(const AxbFunction& f, const QuadratureGrid& grid) {
  require_nodes(grid, "Weil check");
  require_hygiene(f, grid);
  std::complex<double> quotient_side = 0.0;
  for (std::size_t i = 0; i < grid.a_nodes().size(); ++i) {
    const double a = grid.a_nodes()[i];
    quotient_side += grid.a_weights()[i] / a * t_n_axb(f, a, grid);
  }
  const std::complex<double> group_side = integrate_group(f, grid);
  return {quotient_side, group_side, std::abs(quotient_side - group_side)};
}

SigmaCheck sigma_check_axb(AxbPoint x, const QuadratureGrid& grid) {
  require_nodes(grid, "sigma check");
  x = AxbPoint::make(x.a, x.b);
  const auto& bn = grid.b_nodes();
  const auto& bw = grid.b_weights();

  // sigma_N: int_N v d(lambda_N pushed by s -> x s x^-1) = sigma int_N v.
  // The bump has width sqrt(a) so that v and v(a .) are equally well
  // resolved; any nonzero v gives the same quotient.
  const double width = std::sqrt(x.a);
  auto bump = [width](double s) { return std::exp(-0.5 * (s / width) * (s / width)); };
  const AxbPoint x_inv = inverse(x);
  double pushed = 0.0, plain = 0.0;
  for (std::size_t j = 0; j < bn.size(); ++j) {
    const AxbPoint conj = x * AxbPoint::translation(bn[j]) * x_inv;
    pushed += bw[j] * bump(conj.b);
    plain += bw[j] * bump(bn[j]);
  }
  const double sigma = pushed / plain;

  // Delta_G: int f dlambda_G = Delta_G(x) int R_x f dlambda_G, with a probe
  // placed so that f and R_x f sit symmetrically inside the box.
  GaussianParams p;
  p.log_center = 0.5 * std::log(x.a);
  p.log_width = 0.12;
  p.b_center = 0.5 * x.b;
  const AxbFunction f = gaussian(p);
  const AxbFunction moved = right_translate(f, x);
  require_hygiene(f, grid);
  require_hygiene(moved, grid);
  const double delta_group = integrate_group(f, grid).real() / integrate_group(moved, grid).real();

  // Delta_{G/N} on (0, inf) with da / a; the coset of x is x.a.
  auto phi = [&](double a) { return std::exp(-0.5 * std::pow((std::log(a) - p.log_center) / p.log_width, 2)); };
  std::vector<double> quotient_weights;
  for (std::size_t i = 0; i < grid.a_nodes().size(); ++i) quotient_weights.push_back(grid.a_weights()[i] / grid.a_nodes()[i]);
  const double delta_quotient = axis_ratio(grid.a_nodes(), quotient_weights, phi, [&](double a) { return phi(a * x.a); });

  const double expected = 1.0 / x.a;
  const double residual = std::max({std::abs(sigma - expected), std::abs(delta_group - sigma * delta_quotient),
                                    std::abs(delta_group - expected)});
  return {sigma, delta_group, delta_quotient, residual};
}

double haar_modulus_axb(double c, const QuadratureGrid& grid) {
  if (!(std::isfinite(c) && c != 0.0)) throw ParameterOutOfRange("(a, b) -> (a, c b) needs c != 0");
  GaussianParams p;
  p.b_width = std::sqrt(std::abs(c));
  const AxbFunction f = gaussian(p);
  const AxbFunction composed{[f, c](double a, double b) { return f(a, c * b); }, f.bound(), "f o alpha"};
  require_hygiene(f, grid);
  require_hygiene(composed, grid);
  return integrate_group(f, grid).real() / integrate_group(composed, grid).real();
}

Eigen::MatrixXcd sample_on_grid(const AxbFunction& f, const QuadratureGrid& grid) {
  const auto na = static_cast<Eigen::Index>(grid.a_nodes().size());
  const auto nb = static_cast<Eigen::Index>(grid.b_nodes().size());
  Eigen::MatrixXcd m(na, nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < nb; ++j) m(i, j) = f(grid.a_nodes()[i], grid.b_nodes()[j]);
  return m;
}

Eigen::MatrixXcd t_xi_on_grid(const AxbFunction& f, double omega, const QuadratureGrid& grid) {
  require_resolution(omega, grid.spec().a_min, grid);
  const Eigen::MatrixXcd samples = sample_on_grid(f, grid);
  const auto& an = grid.a_nodes();
  const auto& bn = grid.b_nodes();
  const auto& bw = grid.b_weights();
  Eigen::MatrixXcd out(samples.rows(), samples.cols());
  for (Eigen::Index i = 0; i < samples.rows(); ++i) {
    const double a = an[i];
    // T_xi f(a, b) = exp(i omega b / a) F(a): the b dependence factors out.
    std::complex<double> big_f = 0.0;
    for (Eigen::Index k = 0; k < samples.cols(); ++k) big_f += bw[k] * samples(i, k) * std::exp(-kI * (omega * bn[k] / a));
    big_f /= a;
    for (Eigen::Index j = 0; j < samples.cols(); ++j) out(i, j) = big_f * std::exp(kI * (omega * bn[j] / a));
  }
  return out;
}

std::complex<double> pairing_on_grid(const Eigen::MatrixXcd& f, const Eigen::MatrixXcd& g, const QuadratureGrid& grid) {
  std::complex<double> acc = 0.0;
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    const double a = grid.a_nodes()[i];
    std::complex<double> row = 0.0;
    for (Eigen::Index j = 0; j < f.cols(); ++j) row += grid.b_weights()[j] * f(i, j) * std::conj(g(i, j));
    acc += grid.a_weights()[i] / (a * a) * row;
  }
  return acc;
}

ContractionCheck contraction_axb(const AxbFunction& f, double omega, const QuadratureGrid& grid) {
  require_hygiene(f, grid);
  require_resolution(omega, grid.spec().a_min, grid);
  double covariant_norm = 0.0, l1 = 0.0;
  for (std::size_t i = 0; i < grid.a_nodes().size(); ++i) {
    const double a = grid.a_nodes()[i];
    covariant_norm += grid.a_weights()[i] / a * std::abs(t_xi_axb(f, omega, {a, 0.0}, grid));
    double row = 0.0;
    for (std::size_t j = 0; j < grid.b_nodes().size(); ++j) row += grid.b_weights()[j] * std::abs(f(a, grid.b_nodes()[j]));
    l1 += grid.a_weights()[i] / (a * a) * row;
  }
  return {covariant_norm, l1};
}

}  // namespace covariant
