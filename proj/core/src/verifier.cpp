#include "covariant/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <thread>
#include <tuple>

#include "covariant/covariant_space.hpp"
#include "covariant/descent.hpp"
#include "covariant/errors.hpp"
#include "covariant/random.hpp"

namespace covariant {
namespace {

constexpr std::array<std::string_view, kTheoremCount> kNames = {
    "intertwine_R", "intertwine_L",      "normal_formula", "left_char_formula", "adjointness",
    "compact_norm", "contraction",       "infimum",        "quotient_isometry", "kernel_closure",
    "duality",      "surjectivity",      "weil",           "sigma_relation",
};

double max_abs(const Eigen::VectorXcd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

/// Keeps the largest residual and where it came from.
class Worst {
 public:
  void update(double r, std::size_t sample, const char* what) {
    ++samples_;
    if (std::isnan(r)) r = std::numeric_limits<double>::infinity();
    if (r > value_) {
      value_ = r;
      sample_ = sample;
      what_ = what;
    }
  }
  double value() const { return value_; }
  std::size_t samples() const { return samples_; }
  std::string describe() const { return std::string(what_) + " (sample " + std::to_string(sample_) + ")"; }

 private:
  double value_ = 0.0;
  std::size_t samples_ = 0;
  std::size_t sample_ = 0;
  const char* what_ = "";
};

struct Context {
  const CovariantSpace& space;
  ValueSampler& sampler;
  const SuiteOptions& options;
};

GroupFunction random_function(const CovariantSpace& space, ValueSampler& sampler) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(space.group().order()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = sampler.complex();
  return {space.group_ptr(), std::move(v)};
}

CovariantFunction random_covariant(const CovariantSpace& space, ValueSampler& sampler) {
  std::vector<std::complex<double>> values(space.cosets().coset_count());
  for (auto& c : values) c = sampler.complex();
  return space.extend_from_representatives(values);
}

Eigen::VectorXcd random_kernel_vector(const SubspaceBasis& kernel, ValueSampler& sampler) {
  Eigen::VectorXcd c(static_cast<Eigen::Index>(kernel.dimension()));
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = sampler.complex();
  return kernel.euclidean() * c;
}

void check_intertwine_right(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const auto members = space.subgroup().members();
  std::vector<std::complex<double>> factor;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element k_inv = space.group().inverse(members[i]);
    factor.push_back(subgroup_modular_function(space.subgroup(), space.haar(), k_inv) *
                     space.character().value_at(i));
  }
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const GroupFunction f = random_function(space, ctx.sampler);
    const Eigen::VectorXcd tf = space.apply(f).values();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Eigen::VectorXcd lhs = space.apply(translate(f, Side::right, members[i])).values();
      worst.update(max_abs(lhs - factor[i] * tf), t, "T(R_k f) != Delta_N(k^-1) xi(k) T(f)");
    }
  }
}

std::vector<Element> translation_points(const CovariantSpace& space, ValueSampler& sampler) {
  const auto order = static_cast<Element>(space.group().order());
  std::vector<Element> ys;
  if (order <= 64) {
    for (Element y = 0; y < order; ++y) ys.push_back(y);
  } else {
    for (int i = 0; i < 64; ++i) ys.push_back(static_cast<Element>(sampler.rng().below(order)));
  }
  return ys;
}

void check_intertwine_left(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const auto ys = translation_points(space, ctx.sampler);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const GroupFunction f = random_function(space, ctx.sampler);
    const GroupFunction tf = space.apply(f);
    for (Element y : ys) {
      const Eigen::VectorXcd lhs = space.apply(translate(f, Side::left, y)).values();
      worst.update(max_abs(lhs - translate(tf, Side::left, y).values()), t, "T(L_y f) != L_y T(f)");
    }
  }
}

void check_normal_formula(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const FiniteGroup& g = space.group();
  const Subgroup& n = space.subgroup();
  const Character& xi = space.character();
  std::vector<double> sigma(g.order());
  for (Element x = 0; x < g.order(); ++x) sigma[x] = sigma_n(n, space.haar(), x);
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const GroupFunction f = random_function(space, ctx.sampler);
    const GroupFunction tf = space.apply(f);
    for (Element x = 0; x < g.order(); ++x) {
      std::complex<double> acc = 0.0;
      for (Element s : n.members()) {
        const std::size_t pos = n.position(g.conjugate(x, s));
        acc += f(g.product(s, x)) * std::conj(xi.value_at(pos));
      }
      const std::complex<double> rhs = sigma[x] * space.haar().v() * acc;
      worst.update(std::abs(tf(x) - rhs), t, "T(f)(x) != sigma_N(x) int f(sx) conj xi(x^-1 s x)");
    }
  }
}

void check_left_char_formula(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const FiniteGroup& g = space.group();
  const Subgroup& n = space.subgroup();
  const Character& xi = space.character();
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const GroupFunction f = random_function(space, ctx.sampler);
    const GroupFunction tf = space.apply(f);
    for (Element k : n.members()) {
      const GroupFunction lhs = space.apply(translate(f, Side::left, k));
      for (Element x = 0; x < g.order(); ++x) {
        const std::complex<double> factor = std::conj(xi.value_at(n.position(g.conjugate(x, k))));
        worst.update(std::abs(lhs(x) - factor * tf(x)), t, "T(L_k f)(x) != conj xi(x^-1 k x) T(f)(x)");
      }
    }
  }
}

void check_adjointness(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const GroupFunction f = random_function(space, ctx.sampler);
    const GroupFunction h = random_function(space, ctx.sampler);
    const auto lhs = pairing(space.apply(f), h, space.haar());
    const auto rhs = pairing(f, space.apply(h), space.haar());
    worst.update(std::abs(lhs - rhs), t, "<T f, g> != <f, T g>");
  }
}

void check_compact_norm(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const double mass = space.haar().v() * static_cast<double>(space.subgroup().size());
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const CovariantFunction psi = t % 2 == 0 ? random_covariant(space, ctx.sampler)
                                             : space.t_xi(random_function(space, ctx.sampler));
    const double l1 = l1_norm(psi.underlying(), space.haar());
    worst.update(std::abs(l1 - mass * space.norm_one(psi)), t, "||psi||_1 != lambda_N(N) ||psi||_(1)");
  }
}

void check_contraction(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const GroupFunction f = t == 0 ? GroupFunction::zero(space.group_ptr()) : random_function(space, ctx.sampler);
    const double excess = space.norm_one(space.t_xi(f)) - l1_norm(f, space.haar());
    worst.update(std::max(0.0, excess), t, "||T f||_(1) > ||f||_1");
  }
}

void check_infimum(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const SubspaceBasis kernel = space.kernel_basis();
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const CovariantFunction psi = random_covariant(space, ctx.sampler);
    const GroupFunction lift = space.minimal_lift(psi);
    const double target = space.norm_one(psi);
    worst.update(std::abs(l1_norm(lift, space.haar()) - target), t, "||lift||_1 != ||psi||_(1)");
    worst.update(max_abs(space.apply(lift).values() - psi.underlying().values()), t, "T(lift) != psi");
    for (int p = 0; p < 4 && kernel.dimension() > 0; ++p) {
      const GroupFunction moved(space.group_ptr(), lift.values() + random_kernel_vector(kernel, ctx.sampler));
      worst.update(std::max(0.0, target - l1_norm(moved, space.haar())), t, "kernel perturbation beats the lift");
    }
  }
}

void check_quotient_isometry(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const SubspaceBasis kernel = space.kernel_basis();
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const GroupFunction f = random_function(space, ctx.sampler);
    const double norm = space.quotient_norm(f);
    const GroupFunction best = space.minimal_lift(space.t_xi(f));
    const GroupFunction witness = best - f;
    worst.update(max_abs(space.apply(witness).values()), t, "witness not in the kernel");
    worst.update(std::abs(l1_norm(best, space.haar()) - norm), t, "||f + g||_1 != quotient norm");
    for (int p = 0; p < 4 && kernel.dimension() > 0; ++p) {
      const GroupFunction moved(space.group_ptr(), f.values() + random_kernel_vector(kernel, ctx.sampler));
      worst.update(std::max(0.0, norm - l1_norm(moved, space.haar())), t, "coset point below the quotient norm");
    }
    if (t == 0 && ctx.options.descent_restarts > 0) {
      DescentOptions opts;
      opts.restarts = ctx.options.descent_restarts;
      opts.iterations = ctx.options.descent_iterations;
      opts.seed = ctx.sampler.rng().next();
      const DescentResult found = kernel_l1_descent(space, best, opts);
      worst.update(std::max(0.0, norm - kDescentTolerance - found.best), t, "descent found a smaller coset point");
    }
  }
}

void check_kernel_closure(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const SubspaceBasis kernel = space.kernel_basis();
  const SubspaceBasis closed = space.closed_kernel_basis();
  if (kernel.dimension() != closed.dimension()) {
    worst.update(std::abs(static_cast<double>(kernel.dimension()) - static_cast<double>(closed.dimension())), 0,
                 "closure has a different dimension");
  }
  worst.update(subspace_match_residual(kernel, closed), 0, "closure differs from the kernel");
  worst.update(kernel.gram_residual(), 0, "kernel basis not orthonormal");
}

void check_duality(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const SubspaceBasis kernel = space.kernel_basis();
  const SubspaceBasis annihilator = space.annihilator_basis(kernel);
  const SubspaceBasis linfty = space.linfty_xi_basis();
  const auto cosets = static_cast<double>(space.cosets().coset_count());
  worst.update(std::abs(static_cast<double>(annihilator.dimension()) - cosets), 0, "dim annihilator != |G/N|");
  worst.update(std::abs(static_cast<double>(linfty.dimension()) - cosets), 0, "dim L^inf_xi != |G/N|");
  if (annihilator.dimension() == linfty.dimension()) {
    worst.update(subspace_match_residual(annihilator, linfty), 0, "annihilator differs from L^inf_xi");
  }
  for (std::size_t t = 0; t < ctx.options.trials && linfty.dimension() > 0; ++t) {
    const GroupFunction g(space.group_ptr(), random_kernel_vector(linfty, ctx.sampler));
    const GroupFunction f(space.group_ptr(), random_kernel_vector(kernel, ctx.sampler));
    worst.update(std::abs(pairing(f, g, space.haar())), t, "L^inf_xi element pairs nontrivially with the kernel");
  }
}

void check_surjectivity(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const double dims = static_cast<double>(space.kernel_basis().dimension()) +
                      static_cast<double>(space.cosets().coset_count()) -
                      static_cast<double>(space.group().order());
  worst.update(std::abs(dims), 0, "dim ker + |G/N| != |G|");
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const CovariantFunction psi = random_covariant(space, ctx.sampler);
    const GroupFunction lift = space.minimal_lift(psi);
    worst.update(max_abs(space.apply(lift).values() - psi.underlying().values()), t, "T(lift psi) != psi");
  }
}

void check_weil(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  for (std::size_t t = 0; t < ctx.options.trials; ++t) {
    const GroupFunction f = random_function(space, ctx.sampler);
    const std::complex<double> quotient_side = space.haar().w() * space.t_n(f).sum();
    const std::complex<double> group_side = space.haar().u() * f.values().sum();
    worst.update(std::abs(quotient_side - group_side), t, "int_{G/N} T_N f != int_G f");
  }
}

void check_sigma_relation(const Context& ctx, Worst& worst) {
  const auto& space = ctx.space;
  const FiniteGroup& g = space.group();
  const auto& cosets = space.cosets();
  for (Element x = 0; x < g.order(); ++x) {
    const double lhs = modular_function(g, space.haar(), x);
    const double rhs = sigma_n(space.subgroup(), space.haar(), x) *
                       quotient_modular_function(cosets, space.haar(), cosets.projection(x));
    worst.update(std::abs(lhs - rhs), x, "Delta_G != sigma_N Delta_{G/N}");
  }
  for (Element s : space.subgroup().members()) {
    const double diff = sigma_n(space.subgroup(), space.haar(), s) -
                        subgroup_modular_function(space.subgroup(), space.haar(), s);
    worst.update(std::abs(diff), s, "sigma_N != Delta_N on N");
  }
}

using Check = void (*)(const Context&, Worst&);

constexpr std::array<Check, kTheoremCount> kChecks = {
    check_intertwine_right, check_intertwine_left, check_normal_formula,    check_left_char_formula,
    check_adjointness,      check_compact_norm,    check_contraction,       check_infimum,
    check_quotient_isometry, check_kernel_closure, check_duality,           check_surjectivity,
    check_weil,             check_sigma_relation,
};

TheoremReport finish(CaseKey key, TheoremId id, const Worst& worst, double tolerance) {
  TheoremReport r;
  r.case_key = std::move(key);
  r.id = id;
  r.residual = worst.value();
  r.samples = worst.samples();
  r.passed = r.residual <= tolerance;
  if (!r.passed) r.detail = worst.describe();
  return r;
}

TheoremReport failure(CaseKey key, TheoremId id, const std::exception& e) {
  TheoremReport r;
  r.case_key = std::move(key);
  r.id = id;
  r.residual = std::numeric_limits<double>::infinity();
  r.passed = false;
  r.detail = e.what();
  return r;
}

SplitMix64 theorem_stream(std::uint64_t seed, const CaseKey& key, TheoremId id) {
  return SplitMix64(case_seed(seed, key.text())).split(static_cast<std::uint64_t>(id) + 1);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <typename T, typename F>
std::vector<T> run_parallel(std::size_t count, unsigned threads, F&& job) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = job(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(threads, count); ++w) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = job(i);
    }));
  }
  for (auto& w : workers) w.get();
  return out;
}

}  // namespace

std::string_view to_string(TheoremId id) noexcept { return kNames[static_cast<std::size_t>(id)]; }

TheoremId theorem_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<TheoremId>(i);
  }
  throw UnknownTheorem("unknown theorem id '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

CaseKey CaseKey::of(const Character& xi) {
  CaseKey key;
  key.group = xi.domain().group().name();
  key.subgroup.assign(xi.domain().members().begin(), xi.domain().members().end());
  key.modulus = xi.modulus();
  key.exponents.assign(xi.exponents().begin(), xi.exponents().end());
  return key;
}

CaseKey CaseKey::axb(double omega) {
  CaseKey key;
  key.group = "ax+b";
  key.omega = omega;
  return key;
}

std::string CaseKey::text() const {
  std::string out = group;
  if (omega) return out + "|omega=" + format_double(*omega);
  out += "|N=";
  for (std::size_t i = 0; i < subgroup.size(); ++i) out += (i ? "," : "") + std::to_string(subgroup[i]);
  out += "|xi=" + std::to_string(modulus) + ":";
  for (std::size_t i = 0; i < exponents.size(); ++i) out += (i ? "," : "") + std::to_string(exponents[i]);
  return out;
}

bool operator<(const CaseKey& a, const CaseKey& b) {
  const bool ca = a.omega.has_value(), cb = b.omega.has_value();
  const std::size_t na = a.subgroup.size(), nb = b.subgroup.size();
  return std::tie(ca, a.group, na, a.subgroup, a.modulus, a.exponents, a.omega) <
         std::tie(cb, b.group, nb, b.subgroup, b.modulus, b.exponents, b.omega);
}

HaarData WeightChoice::resolve(const Subgroup& n) const {
  return probability ? probability_on_subgroup(u, n.size()) : weil_normalize(u, v);
}

std::string WeightChoice::text() const {
  return probability ? "u=" + format_double(u) + ", v=1/|N|" : "u=" + format_double(u) + ", v=" + format_double(v);
}

Character corrupted_character(const Character& xi) {
  std::vector<std::uint32_t> e(xi.exponents().begin(), xi.exponents().end());
  const std::uint32_t m = xi.modulus();
  for (auto& k : e) {
    const std::uint32_t negated = (m - k) % m;
    if (negated != k) {
      k = negated;
      return Character::make_unchecked(xi.domain(), m, std::move(e));
    }
  }
  // Every value is real; move one non-identity value off the real axis.
  const Element id = xi.domain().group().identity();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (xi.domain().members()[i] == id) continue;
    if (m > 2) {
      e[i] = (e[i] + 1) % m;
      return Character::make_unchecked(xi.domain(), m, std::move(e));
    }
    for (auto& k : e) k *= 4 / m;
    e[i] = (e[i] + 1) % 4;
    return Character::make_unchecked(xi.domain(), 4, std::move(e));
  }
  return xi;
}

TheoremReport verify_theorem(TheoremId id, const Character& xi, const HaarData& haar, const SuiteOptions& options) {
  if (static_cast<std::size_t>(id) >= kTheoremCount) throw UnknownTheorem("theorem id out of range");
  if (!xi.domain().is_normal()) throw NotNormal("theorem checks need a normal subgroup");
  CaseKey key = CaseKey::of(xi);
  try {
    const Character used = options.corrupt_character ? corrupted_character(xi) : xi;
    const CovariantSpace space(used, haar);
    ValueSampler sampler(theorem_stream(options.seed, key, id), options.snap);
    Worst worst;
    kChecks[static_cast<std::size_t>(id)](Context{space, sampler, options}, worst);
    return finish(std::move(key), id, worst, options.tolerance);
  } catch (const Error& e) {
    return failure(std::move(key), id, e);
  }
}

CaseReport run_case(const Character& xi, const SuiteOptions& options) {
  CaseReport out;
  out.key = CaseKey::of(xi);
  out.haar = options.weights.resolve(xi.domain());
  for (TheoremId id : kAllTheorems) out.theorems.push_back(verify_theorem(id, xi, out.haar, options));
  return out;
}

std::vector<CaseReport> run_suite(const GroupPtr& g, const SuiteOptions& options) {
  if (options.trials == 0) throw ParameterOutOfRange("trials must be at least 1");
  std::vector<Character> characters;
  for (const Subgroup& n : enumerate_normal_subgroups(g)) {
    for (Character& xi : enumerate_characters(n)) characters.push_back(std::move(xi));
  }
  auto cases = run_parallel<CaseReport>(characters.size(), options.threads,
                                        [&](std::size_t i) { return run_case(characters[i], options); });
  std::sort(cases.begin(), cases.end(), [](const CaseReport& a, const CaseReport& b) { return a.key < b.key; });
  return cases;
}

std::vector<TheoremReport> flatten(const std::vector<CaseReport>& cases) {
  std::vector<TheoremReport> out;
  for (const auto& c : cases) out.insert(out.end(), c.theorems.begin(), c.theorems.end());
  std::stable_sort(out.begin(), out.end(), [](const TheoremReport& a, const TheoremReport& b) {
    if (a.case_key < b.case_key) return true;
    if (b.case_key < a.case_key) return false;
    return a.id < b.id;
  });
  return out;
}

bool all_passed(const std::vector<CaseReport>& cases) noexcept {
  for (const auto& c : cases)
    for (const auto& t : c.theorems)
      if (!t.passed) return false;
  return true;
}

}  // namespace covariant
