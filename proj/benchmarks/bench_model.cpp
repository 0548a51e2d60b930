#include <benchmark/benchmark.h>

#include "aifp/defaults.hpp"
#include "aifp/io.hpp"
#include "aifp/projection.hpp"
#include "aifp/wafer.hpp"

using namespace aifp;

namespace {

const ModelInputs& bundle() {
  static const ModelInputs in = default_inputs();
  return in;
}

void BM_ClusterMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cluster_matrix(bundle()));
}
BENCHMARK(BM_ClusterMatrix);

void BM_AggregatePortfolio(benchmark::State& state) {
  const auto& in = bundle();
  for (auto _ : state) benchmark::DoNotOptimize(aggregate_portfolio(in.portfolio, in.catalog, in.factors));
}
BENCHMARK(BM_AggregatePortfolio);

void BM_Project(benchmark::State& state) {
  const auto& in = bundle();
  const Projector pr(in.portfolio, in.catalog, in.factors);
  const auto s = find_scenario(in.scenarios, "intermediate");
  for (auto _ : state) benchmark::DoNotOptimize(pr.project(s));
}
BENCHMARK(BM_Project);

void BM_Sweep(benchmark::State& state) {
  const auto& in = bundle();
  const Projector pr(in.portfolio, in.catalog, in.factors);
  const auto s = find_scenario(in.scenarios, "intermediate");
  std::vector<double> xs;
  for (int i = 0; i < state.range(0); ++i) xs.push_back(0.25 + 0.4 * i / state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sensitivity_sweep(pr, s, SweepParameter::AgentsCagr, xs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(5)->Arg(41);

void BM_OffsetSolve(benchmark::State& state) {
  const auto& in = bundle();
  const Projector pr(in.portfolio, in.catalog, in.factors);
  const auto s = find_scenario(in.scenarios, "high");
  for (auto _ : state) benchmark::DoNotOptimize(solve_hardware_efficiency(pr, s));
}
BENCHMARK(BM_OffsetSolve);

void BM_CalibrateDefectDensity(benchmark::State& state) {
  WaferGeometry g;
  g.chip_area = kGpuDieArea;
  for (auto _ : state) benchmark::DoNotOptimize(calibrate_defect_density(g, 4.83e-2));
}
BENCHMARK(BM_CalibrateDefectDensity);

void BM_RenderFootprintJson(benchmark::State& state) {
  const auto& in = bundle();
  const auto fp = aggregate_portfolio(in.portfolio, in.catalog, in.factors);
  for (auto _ : state) benchmark::DoNotOptimize(render_footprint(fp, Format::Json));
}
BENCHMARK(BM_RenderFootprintJson);

}  // namespace

BENCHMARK_MAIN();
