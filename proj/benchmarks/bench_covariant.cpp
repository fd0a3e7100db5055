#include <memory>
#include <string>

#include <benchmark/benchmark.h>

#include "covariant/axb.hpp"
#include "covariant/builtin_groups.hpp"
#include "covariant/covariant_space.hpp"
#include "covariant/descent.hpp"
#include "covariant/random.hpp"
#include "covariant/verifier.hpp"

using namespace covariant;

namespace {

GroupPtr heisenberg() {
  static const GroupPtr g = std::make_shared<const FiniteGroup>(parse_group_selector("H3"));
  return g;
}

/// H3 over its centre with a nontrivial character: 9 cosets of size 3.
CovariantSpace central_space() {
  const GroupPtr g = heisenberg();
  const Subgroup centre = Subgroup::from_members(g, g->center());
  return CovariantSpace(enumerate_characters(centre).back(), HaarData{});
}

GroupFunction random_function(const GroupPtr& g) {
  SplitMix64 rng(1);
  Eigen::VectorXcd v(g->order());
  for (auto& c : v) c = {rng.symmetric(), rng.symmetric()};
  return GroupFunction(g, v);
}

void BM_TXiApply(benchmark::State& state) {
  const CovariantSpace space = central_space();
  const GroupFunction f = random_function(heisenberg());
  for (auto _ : state) benchmark::DoNotOptimize(space.apply(f));
}
BENCHMARK(BM_TXiApply);

void BM_KernelBasis(benchmark::State& state) {
  const CovariantSpace space = central_space();
  for (auto _ : state) benchmark::DoNotOptimize(space.kernel_basis());
}
BENCHMARK(BM_KernelBasis);

void BM_KernelDescent(benchmark::State& state) {
  const CovariantSpace space = central_space();
  const GroupFunction f = random_function(heisenberg());
  const DescentOptions options{.restarts = static_cast<std::size_t>(state.range(0)), .iterations = 30, .seed = 3};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_l1_descent(space, f, options));
}
BENCHMARK(BM_KernelDescent)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_RunSuite(benchmark::State& state) {
  const GroupPtr g = std::make_shared<const FiniteGroup>(parse_group_selector(state.range(0) ? "D4" : "S3"));
  SuiteOptions options;
  options.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(g, options));
}
BENCHMARK(BM_RunSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TXiAxbPoint(benchmark::State& state) {
  const QuadratureGrid grid = QuadratureGrid::make();
  const AxbFunction f = gaussian({});
  for (auto _ : state) benchmark::DoNotOptimize(t_xi_axb(f, 1.0, {1.5, 0.5}, grid));
}
BENCHMARK(BM_TXiAxbPoint);

void BM_TXiAxbGrid(benchmark::State& state) {
  const auto nodes = static_cast<std::size_t>(state.range(0));
  const QuadratureGrid grid = QuadratureGrid::make({.a_nodes = nodes, .b_nodes = nodes});
  const AxbFunction f = gaussian({});
  for (auto _ : state) benchmark::DoNotOptimize(t_xi_on_grid(f, 0.5, grid));
}
BENCHMARK(BM_TXiAxbGrid)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
