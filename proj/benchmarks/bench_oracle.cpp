#include <benchmark/benchmark.h>

#include "ckosc/oracle/crank_nicolson.hpp"
#include "ckosc/oracle/grid.hpp"
#include "ckosc/oracle/operators.hpp"
#include "ckosc/oracle/quadrature.hpp"

namespace {

using namespace ckosc;

const PhysicalParams kParams = make_params(1.0, 1.2, 1.0, 1.0);

struct Fixture {
  StateSpec spec = StateSpec::number(2, {0.5, 1.0});
  oracle::GridSpec grid;
  std::vector<complex> psi;

  explicit Fixture(int points) : grid(oracle::make_uniform_grid(-8.0, 8.0, points)) {
    const auto q = grid.positions();
    psi = sample_state(kParams, spec, 0.5, q);
  }
};

void BM_Moments(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::moments(f.psi, f.grid, kParams, 0.5));
}
BENCHMARK(BM_Moments)->Arg(4097)->Arg(16385);

void BM_Residual(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::schrodinger_residual(kParams, f.spec, 0.5, f.grid));
}
BENCHMARK(BM_Residual)->Arg(4097);

void BM_CrankNicolsonStep(benchmark::State& state) {
  const Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::crank_nicolson_evolve(kParams, f.psi, f.grid, 0.5, 0.51, 10));
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_CrankNicolsonStep)->Arg(4097)->Arg(8193);

}  // namespace
