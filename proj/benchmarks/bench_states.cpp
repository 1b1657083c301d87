#include <benchmark/benchmark.h>

#include "ckosc/observables.hpp"
#include "ckosc/oracle/grid.hpp"

namespace {

const ckosc::PhysicalParams kParams = ckosc::make_params(1.0, 1.2, 1.0, 1.0);

void BM_GaussCoeffs(benchmark::State& state) {
  const ckosc::SqueezeParams squeeze(0.5, 1.0);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ckosc::gauss_coeffs(kParams, squeeze, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_GaussCoeffs);

void BM_SampleNumberState(benchmark::State& state) {
  const auto spec = ckosc::StateSpec::number(static_cast<int>(state.range(0)), {0.5, 1.0});
  const auto grid = ckosc::oracle::make_grid(kParams, spec, 1.0);
  const auto q = grid.positions();
  for (auto _ : state) benchmark::DoNotOptimize(ckosc::sample_state(kParams, spec, 1.0, q));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(q.size()));
}
BENCHMARK(BM_SampleNumberState)->Arg(0)->Arg(4)->Arg(32);

void BM_UncertaintyProduct(benchmark::State& state) {
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ckosc::uncertainty_product(kParams, 2, {0.7, 0.3}, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_UncertaintyProduct);

void BM_TimeAverage(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ckosc::uncertainty_time_avg(kParams, 0, {0.7, 0.3}));
}
BENCHMARK(BM_TimeAverage);

}  // namespace
