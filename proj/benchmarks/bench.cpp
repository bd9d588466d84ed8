#include <benchmark/benchmark.h>

#include <random>

#include <quadstab/abelian.hpp>
#include <quadstab/catalog.hpp>
#include <quadstab/cdga.hpp>
#include <quadstab/pipeline.hpp>

using namespace quadstab;

static void BM_ToddCoxeterG3Arf0(benchmark::State& state) {
  const GroupCase& gc = get_case(Family::MCG, 3);
  for (auto _ : state) {
    CosetTable t = todd_coxeter(gc.presentation, gc.subgroup_words[0]);
    benchmark::DoNotOptimize(t.n_cosets);
  }
}
BENCHMARK(BM_ToddCoxeterG3Arf0)->Unit(benchmark::kMillisecond);

static void BM_StabilizerPipelineG3Arf0(benchmark::State& state) {
  const GroupCase& gc = get_case(Family::MCG, 3);
  for (auto _ : state) {
    PipelineResult r = stabilizer_pipeline(gc, 0);
    benchmark::DoNotOptimize(r.index);
  }
}
BENCHMARK(BM_StabilizerPipelineG3Arf0)->Unit(benchmark::kMillisecond);

static void BM_SmithNormalForm40(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix a(40, 40);
  for (auto& x : a.entries) x = entry(rng);
  for (auto _ : state) {
    SmithResult s = smith_normal_form(a);
    benchmark::DoNotOptimize(s.s.entries.data());
  }
}
BENCHMARK(BM_SmithNormalForm40)->Unit(benchmark::kMillisecond);

static void BM_CdgaHomologyStab3Step2(benchmark::State& state) {
  CdgaSpec spec = parse_cdga_spec(cdga_spec_text("thm-stab-3-step2"));
  for (auto _ : state) {
    HomologyTable t = homology_table(spec);
    benchmark::DoNotOptimize(t.dims.size());
  }
}
BENCHMARK(BM_CdgaHomologyStab3Step2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
