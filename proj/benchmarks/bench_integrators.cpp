#include <benchmark/benchmark.h>

#include <numbers>

#include "giantatom/continuum.hpp"
#include "giantatom/lattice.hpp"
#include "giantatom/modulation.hpp"

using namespace giantatom;

static void BM_ContinuumConstant(benchmark::State& state) {
    ContinuumParams params;
    params.tau = 0.2;
    params.phi = std::numbers::pi;
    const int steps_per_tau = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(params, 10.0, steps_per_tau));
    }
}
BENCHMARK(BM_ContinuumConstant)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_ContinuumCosine(benchmark::State& state) {
    ContinuumParams params;
    params.tau = 0.2;
    params.phi = std::numbers::pi;
    params.profile1 = CosineProfile{10.0 * std::numbers::pi, 0.0, 1.0};
    params.profile2 = CosineProfile{10.0 * std::numbers::pi, 0.0, 1.0};
    const int steps_per_tau = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(params, 10.0, steps_per_tau));
    }
}
BENCHMARK(BM_ContinuumCosine)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_LatticeQuench(benchmark::State& state) {
    LatticeConfig cfg;
    cfg.hopping = 5.0;
    cfg.g0 = 1.0;
    cfg.span = 4;
    cfg.horizon = static_cast<double>(state.range(0));
    cfg.step = 0.004;
    cfg.schedule = PeriodicQuenchProfile{0.1, 0.4};
    cfg.chain_len = auto_chain_len(cfg.hopping, cfg.horizon, cfg.span);
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_lattice(cfg));
    }
    state.SetLabel("M=" + std::to_string(cfg.chain_len));
}
BENCHMARK(BM_LatticeQuench)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_QuenchEval(benchmark::State& state) {
    const ModulationProfile profile = PeriodicQuenchProfile{0.1, 0.4};
    double t = 0.0;
    double sum = 0.0;
    for (auto _ : state) {
        sum += eval_profile(profile, t);
        t += 0.001;
    }
    benchmark::DoNotOptimize(sum);
}
BENCHMARK(BM_QuenchEval);

BENCHMARK_MAIN();
