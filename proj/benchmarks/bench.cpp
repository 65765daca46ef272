#include <benchmark/benchmark.h>

#include "tess/automorphism.hpp"
#include "tess/curvature.hpp"
#include "tess/discharging.hpp"
#include "tess/generators.hpp"
#include "tess/prismlike.hpp"

using namespace tess;

static void BM_BuildPrism(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prism(state.range(0)));
}
BENCHMARK(BM_BuildPrism)->Arg(10)->Arg(100)->Arg(1000);

static void BM_CurvatureProfile(benchmark::State& state) {
  PlanarMap m = grid_example(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_profile(m));
}
BENCHMARK(BM_CurvatureProfile)->Arg(5)->Arg(20);

static void BM_Automorphisms(benchmark::State& state) {
  PlanarMap m = fullerene_c60();
  for (auto _ : state) benchmark::DoNotOptimize(cellular_automorphisms(m));
}
BENCHMARK(BM_Automorphisms);

static void BM_Discharge(benchmark::State& state) {
  PlanarMap m = grid_example(state.range(0), state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(find_certificate(m, 4, Q(1, 132)));
}
BENCHMARK(BM_Discharge)->Arg(5)->Arg(10);

static void BM_BandDecomposition(benchmark::State& state) {
  PlanarMap m = antiprism(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(band_decomposition(m));
}
BENCHMARK(BM_BandDecomposition)->Arg(43)->Arg(200);

BENCHMARK_MAIN();
