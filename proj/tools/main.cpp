#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lasa/errors.hpp"
#include "lasa/io.hpp"

// Exit codes: 0 success, 1 usage/config, 2 data, 3 internal.
int main(int argc, char** argv) {
    CLI::App app{"Landmark detection and boundary-roughness features for closed polygonal chains"};
    app.set_version_flag("--version", std::string("lasa ") + lasa::kVersion);
    app.require_subcommand(1);

    lasa::cli::DetectOptions detect_opt;
    CLI::App* detect = app.add_subcommand("detect", "Identify landmarks on a boundary file");
    detect->add_option("input", detect_opt.input, "Chain file (csv or json)")->required();
    detect->add_option("--format", detect_opt.format, "Input format: auto|csv|json");
    detect->add_option("--iterations", detect_opt.iterations,
                       "MCMC iterations (default 100*(m+1))");
    detect->add_option("--burnin", detect_opt.burnin, "Burn-in fraction (default 0.5)");
    detect->add_option("--k-hat", detect_opt.k_hat, "Expected landmark count a priori");
    detect->add_option("--alpha-sigma", detect_opt.alpha_sigma, "IG shape (default 3)");
    detect->add_option("--beta-sigma", detect_opt.beta_sigma,
                       "IG scale (default 1/m for an m-vertex chain)");
    detect->add_option("--alpha-omega", detect_opt.alpha_omega,
                       "Beta prior shape (default 2*k_hat/n)");
    detect->add_option("--beta-omega", detect_opt.beta_omega,
                       "Beta prior shape (default 2 - alpha_omega)");
    detect->add_option("--chains", detect_opt.chains, "Parallel MCMC chains (default 4)");
    detect->add_option("--seed", detect_opt.seed, "Master RNG seed");
    detect->add_option("--period", detect_opt.period, "Swap/shift period (default 20)");
    detect->add_option("--shift", detect_opt.shift, "Max partial-shift magnitude (default 1)");
    detect->add_option("--alpha", detect_opt.interval_alpha,
                       "Credible-interval significance level (default 0.05)");
    detect->add_flag("--ppm,!--no-ppm", detect_opt.ppm,
                     "Compute the PPM/least-squares estimate (default on)");
    detect->add_flag("--raw-units", detect_opt.raw_units,
                     "Report feature distances in input units");
    detect->add_flag("--manifest-only", detect_opt.manifest_only,
                     "Write the run manifest and exit");
    detect->add_option("--out-dir", detect_opt.out_dir, "Output directory (or $LASA_OUT_DIR)");

    lasa::cli::SimulateOptions sim_opt;
    CLI::App* simulate = app.add_subcommand("simulate", "Generate synthetic boundary datasets");
    simulate->add_option("--k", sim_opt.k, "True landmark count")->required();
    simulate->add_option("--n", sim_opt.n, "Closed-chain vertex count")->required();
    simulate->add_option("--sigma2", sim_opt.sigma2, "Perpendicular noise variance")->required();
    simulate->add_flag("--equilateral", sim_opt.equilateral, "Equal edge lengths");
    simulate->add_option("--replicates", sim_opt.replicates, "Datasets to generate (default 1)");
    simulate->add_option("--seed", sim_opt.seed, "Master RNG seed");
    simulate->add_flag("--manifest-only", sim_opt.manifest_only,
                       "Write the run manifest and exit");
    simulate->add_option("--out-dir", sim_opt.out_dir, "Output directory (or $LASA_OUT_DIR)");

    lasa::cli::EvaluateOptions eval_opt;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Score predictions against ground truth");
    evaluate->add_option("--data-dir", eval_opt.data_dir,
                         "Directory with chain_*.csv and chain_*.gamma.csv truth files")
        ->required();
    evaluate->add_option("--pred-dir", eval_opt.pred_dir,
                         "Directory with predicted *.gamma.csv files (method=files)");
    evaluate->add_option("--method", eval_opt.method, "files|hull (default files)");
    evaluate->add_option("--window", eval_opt.window, "Matching window (default 5)");
    evaluate->add_option("--out-dir", eval_opt.out_dir, "Output directory (or $LASA_OUT_DIR)");

    lasa::cli::FeaturesOptions feat_opt;
    CLI::App* features = app.add_subcommand("features", "Piecewise roughness feature export");
    features->add_option("input", feat_opt.input, "Chain file (csv or json)")->required();
    features->add_option("--format", feat_opt.format, "Input format: auto|csv|json");
    features->add_option("--landmarks", feat_opt.landmarks, "Indicator file (0/1 per line)");
    features->add_flag("--detect", feat_opt.detect, "Run landmark detection inline");
    features->add_option("--tbr-window", feat_opt.tbr_windows,
                         "TBR window length; repeatable (default 5 50 200)");
    features->add_flag("--raw-units", feat_opt.raw_units,
                       "Report feature distances in input units");
    features->add_option("--iterations", feat_opt.iterations, "MCMC iterations for --detect");
    features->add_option("--burnin", feat_opt.burnin, "Burn-in fraction for --detect");
    features->add_option("--k-hat", feat_opt.k_hat, "Expected landmark count for --detect");
    features->add_option("--alpha-sigma", feat_opt.alpha_sigma, "IG shape for --detect");
    features->add_option("--beta-sigma", feat_opt.beta_sigma, "IG scale for --detect");
    features->add_option("--chains", feat_opt.chains, "MCMC chains for --detect");
    features->add_option("--seed", feat_opt.seed, "Master RNG seed for --detect");
    features->add_option("--out-dir", feat_opt.out_dir, "Output directory (or $LASA_OUT_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (detect->parsed()) return lasa::cli::run_detect(detect_opt);
        if (simulate->parsed()) return lasa::cli::run_simulate(sim_opt);
        if (evaluate->parsed()) return lasa::cli::run_evaluate(eval_opt);
        if (features->parsed()) return lasa::cli::run_features(feat_opt);
    } catch (const lasa::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const lasa::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lasa::GenerationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
