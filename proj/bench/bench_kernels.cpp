// Serial reference against the OpenMP kernels on the two hot paths:
// constraint assembly and row reduction of the resulting systems.

#include <benchmark/benchmark.h>

#include "superkit/catalog.hpp"
#include "superkit/constraints.hpp"

using namespace superkit;

namespace {

const LieSuperalgebra& workload(int which) {
  static const LieSuperalgebra algebras[] = {
      osp12(FieldSpec::rationals()),
      builtin("sl2+osp12"),
      direct_sum(builtin("sl2+osp12", {FieldSpec::prime(101), 0, 0}),
                 osp12(FieldSpec::prime(101))).algebra,
  };
  return algebras[which];
}

kernels::Exec exec_of(int flag) { return flag ? kernels::Exec::Parallel : kernels::Exec::Serial; }

void BM_AssembleTripleConstraints(benchmark::State& state) {
  const auto& L = workload(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        assemble_constraints(L, MapIdentity::TripleDerivation, Parity::Even, exec_of(state.range(1))));
  state.SetLabel(L.name() + " dim " + std::to_string(L.dim()));
}

void BM_RrefConstraints(benchmark::State& state) {
  const auto& L = workload(state.range(0));
  const Matrix m = assemble_constraints(L, MapIdentity::Derivation, Parity::Even, kernels::Exec::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::rref(m, exec_of(state.range(1))));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void BM_SolveTripleDerivations(benchmark::State& state) {
  const auto& L = workload(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        solve_map_constraints(L, MapIdentity::TripleDerivation, Parity::Even, exec_of(state.range(1))));
  state.SetLabel(L.name() + " dim " + std::to_string(L.dim()));
}

// Second argument: 0 serial reference, 1 parallel.
BENCHMARK(BM_AssembleTripleConstraints)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefConstraints)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveTripleDerivations)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
