#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "lasa/errors.hpp"
#include "lasa/io.hpp"
#include "lasa/summaries.hpp"

namespace fs = std::filesystem;

namespace lasa::cli {

int run_features(const FeaturesOptions& opt) {
    const fs::path out_dir = resolve_out_dir(opt.out_dir);
    fs::create_directories(out_dir);

    const PolygonalChain raw = read_chain(opt.input, opt.format);
    const double raw_length = chain_length(raw);
    const PolygonalChain chain = normalize(raw);
    const int m = static_cast<int>(chain.size());

    LandmarkIndicator gamma;
    if (opt.detect) {
        Hyperparameters hyper = Hyperparameters::recommended(chain.size(), opt.k_hat);
        hyper.alpha_sigma = opt.alpha_sigma;
        if (opt.beta_sigma > 0.0) hyper.beta_sigma = opt.beta_sigma;
        hyper.validate();
        SamplerConfig config;
        config.iterations = opt.iterations;
        config.burnin_fraction = opt.burnin;
        config.seed = opt.seed;
        config.n_chains = opt.chains;
        config.validate();
        const std::vector<McmcTrace> traces = run_multi_chain(chain, hyper, config);
        gamma = map_estimate(traces);
    } else {
        if (opt.landmarks.empty()) {
            throw ConfigError("features needs --landmarks FILE or --detect");
        }
        gamma = read_indicator(opt.landmarks);
        if (gamma.size() != chain.size()) {
            throw InvalidInput(opt.landmarks + ": indicator length " +
                               std::to_string(gamma.size()) + " does not match chain size " +
                               std::to_string(chain.size()));
        }
    }

    std::vector<int> windows = opt.tbr_windows.empty() ? std::vector<int>{5, 50, 200}
                                                       : opt.tbr_windows;
    std::vector<int> usable;
    for (int w : windows) {
        if (w > m) {
            if (!opt.tbr_windows.empty()) {
                throw InvalidInput("TBR window " + std::to_string(w) +
                                   " exceeds the vertex count " + std::to_string(m));
            }
            std::cerr << "warning: skipping default TBR window " << w
                      << " (exceeds vertex count " << m << ")\n";
            continue;
        }
        usable.push_back(w);
    }

    const PolygonalChain& feature_chain = opt.raw_units ? raw : chain;
    const std::vector<SegmentFeatureRow> rows = compute_segment_features(feature_chain, gamma);
    const ChainFeatures cf =
        compute_chain_features(feature_chain, gamma, polygon_area(raw.vertices), usable);

    const std::string chain_id = fs::path(opt.input).stem().string();
    write_segment_features_csv(out_dir / "segments.csv", chain_id, rows);
    const std::vector<std::string> ids{chain_id};
    const std::vector<int> sizes{m};
    const std::vector<ChainFeatures> cfs{cf};
    write_chain_features_csv(out_dir / "chain_features.csv", ids, sizes, cfs);

    RunManifest manifest;
    manifest.command = "features";
    manifest.inputs = {opt.input};
    if (!opt.landmarks.empty()) manifest.inputs.push_back(opt.landmarks);
    manifest.out_dir = out_dir.string();
    manifest.seed = opt.seed;
    manifest.raw_length = raw_length;
    manifest.raw_centroid = centroid(raw);
    manifest.extra = {std::string("detect=") + (opt.detect ? "true" : "false"),
                      std::string("raw_units=") + (opt.raw_units ? "true" : "false")};
    for (int w : usable) manifest.extra.push_back("tbr_window=" + std::to_string(w));
    manifest.outputs = {"segments.csv", "chain_features.csv"};
    write_manifest(out_dir / "manifest.json", manifest);

    std::cout << "features: " << chain_id << " k=" << cf.k << " segments=" << rows.size() << '\n';
    return 0;
}

}  // namespace lasa::cli
