#include <benchmark/benchmark.h>

#include "invforms/arith.hpp"
#include "invforms/classify.hpp"
#include "invforms/repdata.hpp"

using namespace invforms;

static void BM_ClassifyFundamentalC(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const SimpleType type(Family::C, l);
  for (auto _ : state) {
    for (int r = 1; r <= l; ++r) benchmark::DoNotOptimize(classify(type, Weight::fundamental(l, r), 2));
  }
}
BENCHMARK(BM_ClassifyFundamentalC)->Arg(8)->Arg(64)->Arg(256);

static void BM_DParityE8(benchmark::State& state) {
  const SimpleType type(Family::E8, 8);
  const Weight w{3, 1, 4, 1, 5, 9, 2, 6};
  for (auto _ : state) benchmark::DoNotOptimize(d_parity_closed_form(type, w));
}
BENCHMARK(BM_DParityE8);

static void BM_CompFactorsC(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int r = 1; r <= l; ++r) benchmark::DoNotOptimize(comp_factors_C(l, r, 2));
  }
}
BENCHMARK(BM_CompFactorsC)->Arg(16)->Arg(128);

static void BM_IrrDimC(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(irr_dim_C(l, l / 2, 2));
}
BENCHMARK(BM_IrrDimC)->Arg(12)->Arg(40);

static void BM_ContainsBase2(benchmark::State& state) {
  std::uint64_t acc = 0;
  for (auto _ : state) {
    for (std::uint64_t x = 0; x < 1024; ++x) acc += contains_to_base_p(x * 7 + 3, x, 2);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_ContainsBase2);
BENCHMARK_MAIN();
