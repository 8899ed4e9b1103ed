#include <benchmark/benchmark.h>

#include "abid/gradings.hpp"
#include "abid/ideals.hpp"
#include "abid/normalisers.hpp"
#include "abid/root_system.hpp"
#include "abid/weyl.hpp"

using namespace abid;

static void BM_BuildRootSystem_E8(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs({Family::E, 8});
    benchmark::DoNotOptimize(rs.size());
  }
}
BENCHMARK(BM_BuildRootSystem_E8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateAbelian_E8(benchmark::State& state) {
  RootSystem rs({Family::E, 8});
  for (auto _ : state) {
    auto ideals = enumerate_abelian(rs);
    benchmark::DoNotOptimize(ideals.size());
  }
}
BENCHMARK(BM_EnumerateAbelian_E8)->Unit(benchmark::kMillisecond);

static void BM_Fibers_E8(benchmark::State& state) {
  RootSystem rs({Family::E, 8});
  for (auto _ : state) {
    auto f = fibers(rs);
    benchmark::DoNotOptimize(f.size());
  }
}
BENCHMARK(BM_Fibers_E8)->Unit(benchmark::kMillisecond);

static void BM_NormaliserBracket_E8(benchmark::State& state) {
  RootSystem rs({Family::E, 8});
  auto ideals = enumerate_abelian(rs);
  for (auto _ : state)
    for (const auto& a : ideals)
      benchmark::DoNotOptimize(normaliser(rs, a, NormaliserMethod::bracket).mask);
}
BENCHMARK(BM_NormaliserBracket_E8)->Unit(benchmark::kMillisecond);

static void BM_ScanMaps_E8(benchmark::State& state) {
  RootSystem rs({Family::E, 8});
  for (auto _ : state) {
    auto rep = scan_maps(rs);
    benchmark::DoNotOptimize(rep.image_f1_size);
  }
}
BENCHMARK(BM_ScanMaps_E8)->Unit(benchmark::kMillisecond);

static void BM_UpperIdealSample_B8(benchmark::State& state) {
  RootSystem rs({Family::B, 8});
  auto samples = sample_upper(rs, 0, 1000);
  for (auto _ : state)
    for (const auto& u : samples)
      benchmark::DoNotOptimize(normaliser(rs, u, NormaliserMethod::via_max).mask);
}
BENCHMARK(BM_UpperIdealSample_B8)->Unit(benchmark::kMillisecond);
