#include <benchmark/benchmark.h>

#include "invforms/lattice.hpp"
#include "invforms/oracle.hpp"

using namespace invforms;

static void BM_WeylLatticeC(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(generate_weyl_lattice_C(l, k));
}
BENCHMARK(BM_WeylLatticeC)->Args({4, 2})->Args({6, 4})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_WeylLatticeA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(generate_weyl_lattice_A(n, k));
}
BENCHMARK(BM_WeylLatticeA)->Args({5, 2})->Args({7, 2})->Unit(benchmark::kMillisecond);

static void BM_RadicalMod2(benchmark::State& state) {
  const auto m = generate_weyl_lattice_C(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(m->radical_mod2());
}
BENCHMARK(BM_RadicalMod2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_OracleSolver(benchmark::State& state) {
  const auto m = generate_weyl_lattice_C(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_solver(*m));
}
BENCHMARK(BM_OracleSolver)->Args({4, 2})->Args({5, 4})->Unit(benchmark::kMillisecond);
