#include <benchmark/benchmark.h>

#include <cmath>

#include "eplab/diagnostics.hpp"
#include "eplab/hydro.hpp"
#include "eplab/polytrope.hpp"
#include "eplab/radial_state.hpp"
#include "eplab/scale_factor.hpp"

namespace {

eplab::RadialState gaussian_ball(int N, std::size_t cells) {
  eplab::Physics phys;
  phys.N = N;
  phys.gamma = 5.0 / 3.0;
  phys.K = 0.1;
  auto s = eplab::make_state(phys, 4.0, cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const double r = s.grid.center(i);
    s.rho[i] = r < 3.0 ? std::exp(-r * r) : 0.0;
  }
  s.reset_floor();
  return s;
}

void BM_LaneEmden(benchmark::State& st) {
  const double h = 1.0 / static_cast<double>(st.range(0));
  for (auto _ : st) {
    benchmark::DoNotOptimize(eplab::solve_lane_emden(1.5, 1.0, 10.0, h));
  }
}
BENCHMARK(BM_LaneEmden)->Arg(1000)->Arg(10000);

void BM_ScaleFactor(benchmark::State& st) {
  for (auto _ : st) {
    benchmark::DoNotOptimize(eplab::integrate_scale(3, 1.0, 1.0, 0.0, 2.0, 1e-3));
  }
}
BENCHMARK(BM_ScaleFactor);

void BM_PoissonRadial(benchmark::State& st) {
  const auto s = gaussian_ball(3, static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(eplab::poisson_radial(s));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_PoissonRadial)->RangeMultiplier(4)->Range(1024, 16384)->Complexity();

void BM_PotentialEnergy(benchmark::State& st) {
  const auto s = gaussian_ball(static_cast<int>(st.range(1)), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(eplab::potential_energy(s));
}
BENCHMARK(BM_PotentialEnergy)->Args({4096, 2})->Args({4096, 3})->Args({4096, 4});

void BM_HydroStep(benchmark::State& st) {
  const auto s = gaussian_ball(3, static_cast<std::size_t>(st.range(0)));
  const double dt = 0.5 * eplab::max_stable_dt(s);
  for (auto _ : st) benchmark::DoNotOptimize(eplab::step(s, dt));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}
BENCHMARK(BM_HydroStep)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
