#include <benchmark/benchmark.h>

#include "lasa/sampler.hpp"
#include "lasa/simulate.hpp"

namespace {

lasa::SimulatedDataset make_dataset(int n) {
    lasa::Rng rng(static_cast<std::uint64_t>(n));
    // keep the noise below the vertex spacing or dense chains cannot stay simple
    const double sigma2 = 2.0e4 / (static_cast<double>(n) * n);
    const lasa::SimScenario scenario{5, n, sigma2, false, 1, static_cast<std::uint64_t>(n)};
    return lasa::simulate_dataset(scenario, rng);
}

void BM_RunChain(benchmark::State& state) {
    const lasa::SimulatedDataset ds = make_dataset(static_cast<int>(state.range(0)));
    const lasa::Hyperparameters hyper = lasa::Hyperparameters::recommended(ds.chain.size());
    lasa::SamplerConfig config;
    config.n_chains = 1;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
    for (auto _ : state) {
        config.seed = seed++;
        lasa::Rng rng(config.seed);
        const lasa::McmcTrace trace = lasa::run_chain(ds.chain, hyper, config, rng);
        iterations += trace.iterations;
        benchmark::DoNotOptimize(trace.samples.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(iterations));
}

void BM_ProposalStep(benchmark::State& state) {
    const lasa::SimulatedDataset ds = make_dataset(static_cast<int>(state.range(0)));
    const lasa::Hyperparameters hyper = lasa::Hyperparameters::recommended(ds.chain.size());
    const lasa::PosteriorContext ctx(ds.chain, hyper);
    lasa::Rng rng(3);
    lasa::ChainState chain_state = lasa::make_state(ctx, lasa::initial_gamma(ctx, rng));
    lasa::MoveStats stats;
    for (auto _ : state) {
        const lasa::Proposal p = lasa::propose_add_delete(chain_state, rng);
        chain_state = lasa::accept_reject(ctx, std::move(chain_state), p, rng, stats);
        benchmark::DoNotOptimize(chain_state.log_lik);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}

}  // namespace

BENCHMARK(BM_RunChain)->Arg(140)->Arg(180)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProposalStep)->Arg(180)->Arg(500)->Arg(2000);

BENCHMARK_MAIN();
