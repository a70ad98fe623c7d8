#include "qcrystal/characters.hpp"
#include "qcrystal/geometric.hpp"

#include <benchmark/benchmark.h>

using namespace qcrystal;

static void BM_TableauD(benchmark::State& state) {
  TableauDModel m(CartanSpec::make(Kind::FinD, 4), {1, 0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(generate(m, std::nullopt, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TableauD)->Arg(1)->Arg(4);

static void BM_Pyramid(benchmark::State& state) {
  PyramidModel m(CartanSpec::make(Kind::AffA, 2), {1, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(generate(m, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_Pyramid)->Arg(4)->Arg(6)->Arg(8);

static void BM_Wall(benchmark::State& state) {
  WallModel m(CartanSpec::make(Kind::AffD, 4), 0);
  for (auto _ : state) benchmark::DoNotOptimize(generate(m, static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_Wall)->Arg(5)->Arg(7);

static void BM_Freudenthal(benchmark::State& state) {
  auto spec = CartanSpec::make(Kind::AffD, 4);
  for (auto _ : state) benchmark::DoNotOptimize(freudenthal(spec, {1, 0, 0, 0, 0}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Freudenthal)->Arg(6)->Arg(8);

static void BM_Validate(benchmark::State& state) {
  auto g = generate(TableauDModel(CartanSpec::make(Kind::FinD, 4), {1, 0, 1, 1}), std::nullopt, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(g));
    benchmark::DoNotOptimize(stembridge(g));
  }
}
BENCHMARK(BM_Validate);

static void BM_CrossMaps(benchmark::State& state) {
  WallModel m(CartanSpec::make(Kind::AffD, 4), 0);
  auto left = column_rep(m, ColumnState{3, 0}, 1);
  auto right = column_rep(m, ColumnState{5, 0}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_cross_maps(left, right));
}
BENCHMARK(BM_CrossMaps);

static void BM_StabilityOracle(benchmark::State& state) {
  auto spec = CartanSpec::make(Kind::AffA, 1);
  QuiverRepT<F5> r(spec, {0, 0, 1, 1});
  r.link(0, 2, F5(1));
  r.link(3, 1, F5(2));
  Framing<F5> t{{0, Matrix<F5>(1, 2)}, {1, Matrix<F5>(0, 2)}};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_stable(r, t));
}
BENCHMARK(BM_StabilityOracle);
BENCHMARK_MAIN();
