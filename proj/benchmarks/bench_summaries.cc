#include <benchmark/benchmark.h>

#include "lasa/sampler.hpp"
#include "lasa/simulate.hpp"
#include "lasa/summaries.hpp"

namespace {

std::vector<lasa::McmcTrace> make_traces(int n, int chains) {
    lasa::Rng rng(19);
    const lasa::SimScenario scenario{5, n, 1.0, false, 1, 19};
    const lasa::SimulatedDataset ds = lasa::simulate_dataset(scenario, rng);
    lasa::SamplerConfig config;
    config.n_chains = chains;
    config.seed = 23;
    return lasa::run_multi_chain(ds.chain, lasa::Hyperparameters::recommended(ds.chain.size()),
                                 config);
}

void BM_ComputePpm(benchmark::State& state) {
    const auto traces = make_traces(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lasa::compute_ppm(traces).size());
    }
}

void BM_DahlEstimate(benchmark::State& state) {
    const auto traces = make_traces(static_cast<int>(state.range(0)), 2);
    const lasa::Ppm ppm = lasa::compute_ppm(traces);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lasa::dahl_estimate(ppm, traces).size());
    }
}

}  // namespace

BENCHMARK(BM_ComputePpm)->Arg(140)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DahlEstimate)->Arg(140)->Arg(300)->Unit(benchmark::kMillisecond);
