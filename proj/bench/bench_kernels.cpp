// Serial reference path against the OpenMP path for the grid kernels.
// Run with OMP_NUM_THREADS set to the thread count of interest.

#include "boxmode/landau.hpp"
#include "boxmode/momentum_continuous.hpp"
#include "boxmode/momentum_discrete.hpp"
#include "boxmode/release.hpp"

#include <benchmark/benchmark.h>

using namespace boxmode;

namespace {

const WellSpec natural{1.0, 1.0, 1.0};

Exec mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Exec::serial : Exec::parallel;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_ContinuousSpectrum(benchmark::State& state)
{
    const EigenstateIndex n(4);
    const auto grid = MomentumGrid::for_state(natural, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectrum(natural, n, grid, mode(state)));
    label(state);
}

void BM_DiscreteExpand(benchmark::State& state)
{
    const StateFunction psi = [](double x) { return std::complex<double>(eigenfunction(natural, EigenstateIndex(5), x), 0.0); };
    for (auto _ : state)
        benchmark::DoNotOptimize(expand(natural, psi, ExtensionPhase(0.3), 256, mode(state)));
    label(state);
}

void BM_FreeEvolution(benchmark::State& state)
{
    const EigenstateIndex n(1);
    const auto box = auto_box(natural, n, 50.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(evolve_free(natural, n, 50.0, box, mode(state)));
    label(state);
}

void BM_SymmetricState(benchmark::State& state)
{
    const landau::LandauSpec spec{};
    for (auto _ : state)
        benchmark::DoNotOptimize(landau::symmetric_gauge_state(spec, 2, 5, std::nullopt, mode(state)));
    label(state);
}

void BM_ApplyHamiltonian(benchmark::State& state)
{
    const landau::LandauSpec spec{};
    const auto psi = landau::symmetric_gauge_state(spec, 1, 3);
    const landau::GaugeField gauge{landau::Gauge::symmetric, spec.B};
    for (auto _ : state)
        benchmark::DoNotOptimize(landau::apply_hamiltonian(spec, gauge, psi, mode(state)));
    label(state);
}

} // namespace

BENCHMARK(BM_ContinuousSpectrum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscreteExpand)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FreeEvolution)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetricState)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyHamiltonian)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
