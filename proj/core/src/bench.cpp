#include "lasa/bench.hpp"

#include <algorithm>
#include <chrono>

#include "lasa/errors.hpp"
#include "lasa/io.hpp"
#include "lasa/metrics.hpp"
#include "lasa/summaries.hpp"

namespace lasa {

namespace {

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

BenchmarkRow score(const SimulatedDataset& ds, int replicate, const std::string& method,
                   const LandmarkIndicator& estimate, double runtime_seconds) {
    BenchmarkRow row;
    row.k_true = ds.scenario.k_true;
    row.n = ds.scenario.n;
    row.sigma2 = ds.scenario.sigma2;
    row.equilateral = ds.scenario.equilateral;
    row.replicate = replicate;
    row.method = method;
    row.mcc = mcc(ds.gamma_true, estimate);
    row.ari = ari(segment_labels_unchecked(ds.gamma_true), segment_labels_unchecked(estimate));
    const ConfusionMatrix cm = windowed_match(ds.gamma_true, estimate);
    row.tp = cm.tp;
    row.fp = cm.fp;
    row.fn = cm.fn;
    row.runtime_seconds = runtime_seconds;
    return row;
}

}  // namespace

BenchmarkResults run_benchmark(std::span<const SimScenario> scenarios,
                               const SamplerConfig& sampler_config) {
    BenchmarkResults results;
    for (const SimScenario& scenario : scenarios) {
        scenario.validate();
        for (int rep = 0; rep < scenario.replicates; ++rep) {
            Rng sim_rng(scenario.seed + static_cast<std::uint64_t>(rep));
            const SimulatedDataset ds = simulate_dataset(scenario, sim_rng);

            SamplerConfig config = sampler_config;
            config.seed = sampler_config.seed + static_cast<std::uint64_t>(rep);

            const auto start = std::chrono::steady_clock::now();
            const std::vector<McmcTrace> traces = run_multi_chain(ds.chain,
                Hyperparameters::recommended(ds.chain.size()), config);
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

            const LandmarkIndicator map_gamma = map_estimate(traces);
            const Ppm ppm = compute_ppm(traces);
            const LandmarkIndicator ppm_gamma = dahl_estimate(ppm, traces);
            const LandmarkIndicator hull_gamma = convex_hull_baseline(ds.chain);

            results.rows.push_back(score(ds, rep, "map", map_gamma, elapsed.count()));
            results.rows.push_back(score(ds, rep, "ppm", ppm_gamma, elapsed.count()));
            results.rows.push_back(score(ds, rep, "hull", hull_gamma, 0.0));
        }
    }

    std::map<std::tuple<int, int, double, bool, std::string>, std::vector<BenchmarkRow>> grouped;
    for (const BenchmarkRow& row : results.rows) {
        grouped[{row.k_true, row.n, row.sigma2, row.equilateral, row.method}].push_back(row);
    }
    for (const auto& [key, rows] : grouped) {
        std::vector<double> mccs, aris, times;
        for (const BenchmarkRow& row : rows) {
            mccs.push_back(row.mcc);
            aris.push_back(row.ari);
            times.push_back(row.runtime_seconds);
        }
        results.medians[key] = {median(std::move(mccs)), median(std::move(aris)),
                                median(std::move(times))};
    }
    return results;
}

void write_benchmark_csv(const std::filesystem::path& path, const BenchmarkResults& results) {
    std::string out = "k_true,n,sigma2,equilateral,replicate,method,mcc,ari,tp,fp,fn,runtime_seconds\n";
    for (const BenchmarkRow& row : results.rows) {
        out += std::to_string(row.k_true) + ',' + std::to_string(row.n) + ',' +
               format_double(row.sigma2) + ',' + (row.equilateral ? "true" : "false") + ',' +
               std::to_string(row.replicate) + ',' + row.method + ',' + format_double(row.mcc) +
               ',' + format_double(row.ari) + ',' + std::to_string(row.tp) + ',' +
               std::to_string(row.fp) + ',' + std::to_string(row.fn) + ',' +
               format_double(row.runtime_seconds) + '\n';
    }
    atomic_write(path, out);
}

}  // namespace lasa
