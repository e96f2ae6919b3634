// Serial reference vs OpenMP path of each parallel kernel. Arg 0 = serial,
// 1 = parallel.

#include <benchmark/benchmark.h>

#include "galilei/convergence.hpp"
#include "galilei/enveloping.hpp"
#include "galilei/group_sweeps.hpp"

using namespace galilei;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_Centralizer(benchmark::State& state) {
  const EnvelopingAlgebra env(make_galilei_algebra({Rational(3, 2), Rational(-2), Rational(0)}));
  const auto degree = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_basis(env, degree, exec_of(state)));
  label(state);
}
BENCHMARK(BM_Centralizer)->Args({0, 3})->Args({1, 3})->Args({0, 4})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_AssociativitySweep(benchmark::State& state) {
  const ExtensionParams p{Rational(1), Rational(2), Rational(3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_associativity_defect(GroupKind::covering, p, 10000, 42, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_AssociativitySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExactAssociativitySweep(benchmark::State& state) {
  const ExtensionParams p{Rational(1, 3), Rational(2), Rational(-3, 5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_exact_associativity_defect(GroupKind::covering, p, 1000, 42, exec_of(state)));
  }
  label(state);
}
BENCHMARK(BM_ExactAssociativitySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConvergenceStudy(benchmark::State& state) {
  const auto experiment = thomas_experiment({0.6, -0.2}, {0.1, 0.8}, 0.9);
  const auto grid = parse_c_grid("1e2:1e6:logx10");
  for (auto _ : state) benchmark::DoNotOptimize(convergence_study(experiment, grid, exec_of(state)));
  label(state);
}
BENCHMARK(BM_ConvergenceStudy)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
