#include <benchmark/benchmark.h>

#include <numbers>

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/planar.hpp"
#include "casimir/plasma_gap.hpp"
#include "casimir/resonance.hpp"

using namespace casimir;

namespace {

void BM_kappa_integral(benchmark::State& state) {
    const PlanarScenario s{Drude{1.37e16, 1.37e14}, Vacuum{}, 1e-6, 300.0};
    const double xi = matsubara_frequency(static_cast<int>(state.range(0)), 300.0);
    QuadratureControl ctl;
    ctl.rel_tol = 1e-10;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kappa_log_dispersion_integral(s, xi, ctl));
    }
}
BENCHMARK(BM_kappa_integral)->Arg(1)->Arg(10)->Arg(100);

void BM_free_energy(benchmark::State& state) {
    // x = range / 10: spans quantum-dominated to classical summation costs
    const double x = static_cast<double>(state.range(0)) / 10.0;
    const double t = x * si::hbar * si::c_light /
                     (2.0 * std::numbers::pi * si::k_boltzmann * 1e-6);
    const PlanarScenario s{IdealMetal{}, Vacuum{}, 1e-6, t};
    EngineOptions opt;
    opt.tol = 1e-8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(free_energy(s, opt));
    }
}
BENCHMARK(BM_free_energy)->Arg(1)->Arg(8)->Arg(50)->Arg(200);

void BM_free_energy_drude(benchmark::State& state) {
    const PlanarScenario s{Drude{1.37e16, 1.37e14}, Vacuum{}, 1e-6, 300.0};
    EngineOptions opt;
    opt.tol = 1e-8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(free_energy(s, opt));
    }
}
BENCHMARK(BM_free_energy_drude);

void BM_zero_temperature(benchmark::State& state) {
    const PlanarScenario s{IdealMetal{}, Vacuum{}, 1e-6, 0.0};
    EngineOptions opt;
    opt.tol = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(free_energy_zero_temperature(s, opt));
    }
}
BENCHMARK(BM_zero_temperature);

void BM_vacuum_gap_series(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(vacuum_gap_free_energy(1e-6, 300.0, 1e-10));
    }
}
BENCHMARK(BM_vacuum_gap_series);

void BM_screened_series(benchmark::State& state) {
    const PlasmaGapParams p = make_gap_params(1e-6, 300.0, 5e6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(screened_free_energy(p, 1e-10));
    }
}
BENCHMARK(BM_screened_series);

void BM_resonance_series(benchmark::State& state) {
    const PolarizabilityModel pol{1e-29, 0.0, PolarizabilityMode::StaticOnly};
    const ResonanceQuery q{1e-8, 300.0, +1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(resonance_series(q, pol, 1e-12));
    }
}
BENCHMARK(BM_resonance_series);

}  // namespace

BENCHMARK_MAIN();
