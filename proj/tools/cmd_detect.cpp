#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "lasa/io.hpp"
#include "lasa/summaries.hpp"

namespace fs = std::filesystem;

namespace lasa::cli {

std::string resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("LASA_OUT_DIR")) {
        if (*env) return env;
    }
    return ".";
}

int run_detect(const DetectOptions& opt) {
    const fs::path out_dir = resolve_out_dir(opt.out_dir);
    fs::create_directories(out_dir);

    const PolygonalChain raw = read_chain(opt.input, opt.format);
    const int m = static_cast<int>(raw.size());
    const double raw_length = chain_length(raw);
    const Point2 raw_centroid = centroid(raw);
    const PolygonalChain chain = normalize(raw);

    Hyperparameters hyper = Hyperparameters::recommended(chain.size(), opt.k_hat);
    hyper.alpha_sigma = opt.alpha_sigma;
    if (opt.beta_sigma > 0.0) hyper.beta_sigma = opt.beta_sigma;
    if (opt.alpha_omega > 0.0) hyper.alpha_omega = opt.alpha_omega;
    if (opt.beta_omega > 0.0) hyper.beta_omega = opt.beta_omega;
    hyper.validate();

    SamplerConfig config;
    config.iterations = opt.iterations;
    config.burnin_fraction = opt.burnin;
    config.special_move_period = opt.period;
    config.shift_magnitude = opt.shift;
    config.seed = opt.seed;
    config.n_chains = opt.chains;
    config.validate();

    RunManifest manifest;
    manifest.command = "detect";
    manifest.inputs = {opt.input};
    manifest.out_dir = out_dir.string();
    manifest.hyper = hyper;
    manifest.has_hyper = true;
    manifest.sampler = config;
    manifest.has_sampler = true;
    manifest.seed = opt.seed;
    manifest.raw_length = raw_length;
    manifest.raw_centroid = raw_centroid;
    manifest.extra = {std::string("ppm=") + (opt.ppm ? "true" : "false"),
                      std::string("raw_units=") + (opt.raw_units ? "true" : "false"),
                      "interval_alpha=" + format_double(opt.interval_alpha),
                      "resolved_iterations=" +
                          std::to_string(config.resolved_iterations(chain.size()))};
    manifest.outputs = {"report.json", "map.gamma.csv", "segments.csv", "chain_features.csv"};
    if (opt.ppm) manifest.outputs.insert(manifest.outputs.begin() + 2, "ppm.gamma.csv");

    if (opt.manifest_only) {
        write_manifest(out_dir / "manifest.json", manifest);
        return 0;
    }

    const std::vector<McmcTrace> traces = run_multi_chain(chain, hyper, config);

    DetectionReport report;
    report.input = opt.input;
    report.n_vertices = m;
    report.raw_length = raw_length;
    report.raw_centroid = raw_centroid;
    report.estimate.gamma_map = map_estimate(traces);
    report.estimate.map_log_post = -std::numeric_limits<double>::infinity();
    for (const McmcTrace& t : traces) {
        for (double lp : t.log_post_trace) {
            report.estimate.map_log_post = std::max(report.estimate.map_log_post, lp);
        }
    }
    if (opt.ppm) {
        const Ppm ppm = compute_ppm(traces);
        report.estimate.gamma_ppm = dahl_estimate(ppm, traces);
    } else {
        report.estimate.gamma_ppm = report.estimate.gamma_map;
    }
    report.estimate.intervals =
        credible_intervals(traces, report.estimate.gamma_map, opt.interval_alpha);

    const PolygonalChain& feature_chain = opt.raw_units ? raw : chain;
    report.segment_features = compute_segment_features(feature_chain, report.estimate.gamma_map);
    for (const McmcTrace& t : traces) report.traces.push_back(&t);

    const std::string chain_id = fs::path(opt.input).stem().string();
    write_detection_report(out_dir / "report.json", report);
    write_indicator(out_dir / "map.gamma.csv", report.estimate.gamma_map);
    if (opt.ppm) write_indicator(out_dir / "ppm.gamma.csv", report.estimate.gamma_ppm);
    write_segment_features_csv(out_dir / "segments.csv", chain_id, report.segment_features);

    const std::vector<int> tbr_windows{5, 50, 200};
    std::vector<int> usable;
    for (int w : tbr_windows) {
        if (w <= m) usable.push_back(w);
    }
    const ChainFeatures cf = compute_chain_features(feature_chain, report.estimate.gamma_map,
                                                    polygon_area(raw.vertices), usable);
    const std::vector<std::string> ids{chain_id};
    const std::vector<int> sizes{m};
    const std::vector<ChainFeatures> cfs{cf};
    write_chain_features_csv(out_dir / "chain_features.csv", ids, sizes, cfs);

    write_manifest(out_dir / "manifest.json", manifest);

    std::cout << "detect: " << chain_id << " n=" << m
              << " map_k=" << landmark_count(report.estimate.gamma_map)
              << " log_posterior=" << format_double(report.estimate.map_log_post) << '\n';
    return 0;
}

}  // namespace lasa::cli
