// Cost of each pipeline stage on the named families, plus the two scans.
// Family sizes stay inside the default caps so every run finishes quickly.

#include <benchmark/benchmark.h>

#include "recip/analysis.hpp"
#include "recip/classification.hpp"
#include "recip/pencil.hpp"
#include "recip/reciprocal_ideal.hpp"
#include "recip/scan.hpp"
#include "recip/symmetry.hpp"

namespace {

recip::ColouredGraph cycle(int n) { return recip::build_family({recip::Family::kCycle, n}); }

void BM_Adjugate(benchmark::State& state) {
  const auto a = recip::coloured_adjacency(cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(recip::adjugate(a));
}
BENCHMARK(BM_Adjugate)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_LinearPart(benchmark::State& state) {
  const recip::Parametrization param(cycle(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(recip::linear_part(param));
}
BENCHMARK(BM_LinearPart)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_QuadraticPart(benchmark::State& state) {
  const recip::Parametrization param(cycle(static_cast<int>(state.range(0))));
  const recip::LinearPart linear = recip::linear_part(param);
  for (auto _ : state) benchmark::DoNotOptimize(recip::quadratic_part(param, linear));
}
BENCHMARK(BM_QuadraticPart)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_AutomorphismsComplete(benchmark::State& state) {
  const auto g = recip::build_family({recip::Family::kComplete, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(recip::automorphism_group(g));
}
BENCHMARK(BM_AutomorphismsComplete)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_AutomorphismsPetersen(benchmark::State& state) {
  const auto g = recip::build_family({recip::Family::kPetersen});
  for (auto _ : state) benchmark::DoNotOptimize(recip::automorphism_group(g));
}
BENCHMARK(BM_AutomorphismsPetersen)->Unit(benchmark::kMillisecond);

void BM_SegreSymbol(benchmark::State& state) {
  const auto g = recip::build_family({recip::Family::kPetersen});
  for (auto _ : state) benchmark::DoNotOptimize(recip::segre_symbol(g));
}
BENCHMARK(BM_SegreSymbol)->Unit(benchmark::kMillisecond);

void BM_AnalyzePetersen(benchmark::State& state) {
  const auto g = recip::build_family({recip::Family::kPetersen});
  recip::AnalysisOptions options;
  options.quadratics = true;
  for (auto _ : state) benchmark::DoNotOptimize(recip::analyze(g, options));
}
BENCHMARK(BM_AnalyzePetersen)->Unit(benchmark::kMillisecond);

void BM_CycleScan(benchmark::State& state) {
  recip::ScanOptions options;
  options.jobs = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        recip::scan_cycle_binomials(static_cast<int>(state.range(0)), recip::VertexColourings::kAll, options));
  }
}
BENCHMARK(BM_CycleScan)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CirculantScan(benchmark::State& state) {
  recip::ScanOptions options;
  options.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(recip::scan_circulants(static_cast<int>(state.range(0)), options));
}
BENCHMARK(BM_CirculantScan)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
