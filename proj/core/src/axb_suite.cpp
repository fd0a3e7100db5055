#include <algorithm>
#include <cmath>
#include <limits>

#include "covariant/axb.hpp"
#include "covariant/errors.hpp"
#include "covariant/random.hpp"
#include "covariant/verifier.hpp"

namespace covariant {
namespace {

constexpr std::complex<double> kI{0.0, 1.0};

struct Outcome {
  double residual = 0.0;
  std::size_t samples = 0;
  std::string worst;

  void update(double r, const std::string& what) {
    ++samples;
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    if (r > residual) residual = r, worst = what;
  }
};

// Evaluation points with a in [e^-0.5, e^0.5] and |b| <= 2.
AxbPoint random_point(SplitMix64& rng) { return {std::exp(0.5 * rng.symmetric()), 2.0 * rng.symmetric()}; }

// Group elements close enough to the identity that translates of the test
// family stay inside the box.
AxbPoint random_shift(SplitMix64& rng) { return {std::exp(0.2 * rng.symmetric()), rng.symmetric()}; }

std::complex<double> conj_xi(double omega, double s) { return std::exp(-kI * (omega * s)); }

struct AxbContext {
  double omega;
  const QuadratureGrid& grid;
  SplitMix64& rng;
  std::size_t trials;
};

void axb_intertwine_right(const AxbContext& c, Outcome& out) {
  for (std::size_t t = 0; t < c.trials; ++t) {
    const AxbFunction f = gaussian(random_gaussian(c.rng));
    const double s = c.rng.symmetric();
    const AxbFunction moved = right_translate(f, AxbPoint::translation(s));
    const AxbPoint x = random_point(c.rng);
    // N = R is abelian, so Delta_N is identically 1.
    const auto rhs = std::conj(conj_xi(c.omega, s)) * t_xi_axb(f, c.omega, x, c.grid);
    out.update(std::abs(t_xi_axb(moved, c.omega, x, c.grid) - rhs), "T(R_k f) != xi(k) T(f)");
  }
}

void axb_intertwine_left(const AxbContext& c, Outcome& out) {
  for (std::size_t t = 0; t < c.trials; ++t) {
    const AxbFunction f = gaussian(random_gaussian(c.rng));
    const AxbPoint y = random_shift(c.rng);
    const AxbPoint x = random_point(c.rng);
    const auto lhs = t_xi_axb(left_translate(f, y), c.omega, x, c.grid);
    const auto rhs = t_xi_axb(f, c.omega, inverse(y) * x, c.grid);
    out.update(std::abs(lhs - rhs), "T(L_y f) != L_y T(f)");
  }
}

void axb_normal_formula(const AxbContext& c, Outcome& out) {
  for (std::size_t t = 0; t < c.trials; ++t) {
    const AxbFunction f = gaussian(random_gaussian(c.rng));
    const AxbPoint x = random_point(c.rng);
    const double sigma = sigma_check_axb(x, c.grid).sigma;
    const AxbPoint x_inv = inverse(x);
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < c.grid.b_nodes().size(); ++j) {
      const AxbPoint s = AxbPoint::translation(c.grid.b_nodes()[j]);
      acc += c.grid.b_weights()[j] * f(s * x) * conj_xi(c.omega, (x_inv * s * x).b);
    }
    out.update(std::abs(t_xi_axb(f, c.omega, x, c.grid) - sigma * acc),
               "T(f)(x) != sigma_N(x) int f(sx) conj xi(x^-1 s x)");
  }
}

void axb_left_char_formula(const AxbContext& c, Outcome& out) {
  for (std::size_t t = 0; t < c.trials; ++t) {
    const AxbFunction f = gaussian(random_gaussian(c.rng));
    const AxbPoint k = AxbPoint::translation(c.rng.symmetric());
    const AxbPoint x = random_point(c.rng);
    const auto lhs = t_xi_axb(left_translate(f, k), c.omega, x, c.grid);
    const auto rhs = conj_xi(c.omega, (inverse(x) * k * x).b) * t_xi_axb(f, c.omega, x, c.grid);
    out.update(std::abs(lhs - rhs), "T(L_k f)(x) != conj xi(x^-1 k x) T(f)(x)");
  }
}

void axb_adjointness(const AxbContext& c, Outcome& out) {
  for (std::size_t t = 0; t < c.trials; ++t) {
    const AxbFunction f = gaussian(random_gaussian(c.rng));
    const AxbFunction g = gaussian(random_gaussian(c.rng));
    const auto lhs = pairing_on_grid(t_xi_on_grid(f, c.omega, c.grid), sample_on_grid(g, c.grid), c.grid);
    const auto rhs = pairing_on_grid(sample_on_grid(f, c.grid), t_xi_on_grid(g, c.omega, c.grid), c.grid);
    out.update(std::abs(lhs - rhs), "<T f, g> != <f, T g>");
  }
}

void axb_contraction(const AxbContext& c, Outcome& out) {
  for (std::size_t t = 0; t < c.trials; ++t) {
    const AxbFunction f = gaussian(random_gaussian(c.rng));
    const ContractionCheck r = contraction_axb(f, c.omega, c.grid);
    out.update(std::max(0.0, r.covariant_norm - r.l1_norm), "||T f||_(1) > ||f||_1");
  }
}

void axb_weil(const AxbContext& c, Outcome& out) {
  for (std::size_t t = 0; t < c.trials; ++t) {
    const GaussianParams p = random_gaussian(c.rng);
    const WeilCheck r = weil_check_axb(gaussian(p), c.grid);
    out.update(r.residual, "int_{G/N} T_N f != int_G f");
    out.update(std::abs(r.group_side - gaussian_group_integral(p)), "quadrature misses the exact integral");
  }
}

void axb_sigma_relation(const AxbContext& c, Outcome& out) {
  std::vector<AxbPoint> points = {{0.5, 0.0}, {2.0, 0.0}, {3.0, 0.0}, {1.0, 5.0}};
  for (std::size_t t = 0; t < c.trials; ++t) points.push_back(random_point(c.rng));
  for (const AxbPoint& x : points) out.update(sigma_check_axb(x, c.grid).residual, "Delta_G != sigma_N Delta_{G/N}");
  // sigma_N restricted to N is Delta_N = 1.
  out.update(std::abs(sigma_check_axb({1.0, c.rng.symmetric()}, c.grid).sigma - 1.0), "sigma_N != Delta_N on N");
  for (std::size_t t = 0; t <= c.trials; ++t) {
    const AxbPoint x = t == 0 ? AxbPoint{2.0, 0.0} : random_point(c.rng);
    const AxbPoint y = t == 0 ? AxbPoint{3.0, 0.0} : random_point(c.rng);
    const double product = sigma_check_axb(x * y, c.grid).sigma;
    out.update(std::abs(product - sigma_check_axb(x, c.grid).sigma * sigma_check_axb(y, c.grid).sigma),
               "sigma_N not multiplicative");
  }
  out.update(std::abs(haar_modulus_axb(3.0, c.grid) - 3.0), "Haar modulus of (a, b) -> (a, 3b) != 3");
}

using AxbCheck = void (*)(const AxbContext&, Outcome&);

AxbCheck axb_check(TheoremId id) {
  switch (id) {
    case TheoremId::intertwine_R: return axb_intertwine_right;
    case TheoremId::intertwine_L: return axb_intertwine_left;
    case TheoremId::normal_formula: return axb_normal_formula;
    case TheoremId::left_char_formula: return axb_left_char_formula;
    case TheoremId::adjointness: return axb_adjointness;
    case TheoremId::contraction: return axb_contraction;
    case TheoremId::weil: return axb_weil;
    case TheoremId::sigma_relation: return axb_sigma_relation;
    default: return nullptr;
  }
}

}  // namespace

std::vector<CaseReport> run_axb_suite(const AxbSuiteOptions& options) {
  if (options.trials == 0) throw ParameterOutOfRange("trials must be at least 1");
  if (options.omegas.empty()) throw ParameterOutOfRange("need at least one omega");
  const QuadratureGrid grid = QuadratureGrid::make(options.grid);
  for (double omega : options.omegas) {
    if (!std::isfinite(omega)) throw ParameterOutOfRange("omega must be finite");
    require_resolution(omega, options.grid.a_min, grid);
  }

  std::vector<CaseReport> cases;
  for (double omega : options.omegas) {
    CaseReport report;
    report.key = CaseKey::axb(omega);
    for (TheoremId id : kAxbTheorems) {
      SplitMix64 rng = SplitMix64(case_seed(options.seed, report.key.text())).split(static_cast<std::uint64_t>(id) + 1);
      TheoremReport r;
      r.case_key = report.key;
      r.id = id;
      try {
        Outcome out;
        axb_check(id)(AxbContext{omega, grid, rng, options.trials}, out);
        r.residual = out.residual;
        r.samples = out.samples;
        r.passed = out.residual <= options.tolerance;
        if (!r.passed) r.detail = out.worst;
      } catch (const Error& e) {
        r.residual = std::numeric_limits<double>::infinity();
        r.passed = false;
        r.detail = e.what();
      }
      report.theorems.push_back(std::move(r));
    }
    cases.push_back(std::move(report));
  }
  std::sort(cases.begin(), cases.end(), [](const CaseReport& a, const CaseReport& b) { return a.key < b.key; });
  return cases;
}

ClosedFormErrors closed_form_errors(const QuadratureGrid& grid, double omega) {
  ClosedFormErrors e;
  GaussianParams p;
  p.log_center = 0.1;
  p.b_center = 0.5;
  const WeilCheck weil = weil_check_axb(gaussian(p), grid);
  const std::complex<double> exact = gaussian_group_integral(p);
  e.weil = std::max(std::abs(weil.quotient_side - exact), std::abs(weil.group_side - exact));
  for (double a : {0.5, 2.0, 3.0}) e.sigma = std::max(e.sigma, sigma_check_axb({a, 0.0}, grid).residual);
  GaussianParams q;
  for (const AxbPoint x : {AxbPoint{1.0, 0.0}, AxbPoint{1.5, 1.0}, AxbPoint{2.0, -1.0}}) {
    e.t_xi = std::max(e.t_xi, std::abs(t_xi_axb(gaussian(q), omega, x, grid) - gaussian_t_xi(q, omega, x)));
  }
  return e;
}

}  // namespace covariant
