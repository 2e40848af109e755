#include <algorithm>
#include <filesystem>
#include <iostream>

#include "commands.hpp"
#include "lasa/errors.hpp"
#include "lasa/io.hpp"
#include "lasa/metrics.hpp"

namespace fs = std::filesystem;

namespace lasa::cli {

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) return values[mid];
    return 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

int run_evaluate(const EvaluateOptions& opt) {
    const fs::path out_dir = resolve_out_dir(opt.out_dir);
    fs::create_directories(out_dir);
    if (opt.method != "files" && opt.method != "hull") {
        throw ConfigError("--method must be 'files' or 'hull'");
    }
    if (opt.method == "files" && opt.pred_dir.empty()) {
        throw ConfigError("--method files requires --pred-dir");
    }

    // Chain files with a matching .gamma.csv truth file, in name order.
    std::vector<fs::path> chain_files;
    for (const auto& entry : fs::directory_iterator(opt.data_dir)) {
        const fs::path& p = entry.path();
        if (p.extension() == ".csv" && p.string().find(".gamma.csv") == std::string::npos) {
            chain_files.push_back(p);
        }
    }
    std::sort(chain_files.begin(), chain_files.end());
    if (chain_files.empty()) {
        throw InvalidInput("no chain files found in " + opt.data_dir);
    }

    std::string csv = "file,method,n,k_true,k_pred,mcc,ari,tp,fp,fn,tn\n";
    std::vector<double> mccs, aris;
    for (const fs::path& chain_file : chain_files) {
        const std::string stem = chain_file.stem().string();
        const fs::path truth_file = fs::path(opt.data_dir) / (stem + ".gamma.csv");
        if (!fs::exists(truth_file)) {
            throw InvalidInput("missing truth file " + truth_file.string());
        }
        const PolygonalChain chain = read_chain(chain_file);
        const LandmarkIndicator truth = read_indicator(truth_file);
        if (truth.size() != chain.size()) {
            throw InvalidInput(truth_file.string() + ": indicator length " +
                               std::to_string(truth.size()) + " does not match chain size " +
                               std::to_string(chain.size()));
        }

        LandmarkIndicator pred;
        if (opt.method == "hull") {
            pred = convex_hull_baseline(chain);
        } else {
            const fs::path pred_file = fs::path(opt.pred_dir) / (stem + ".gamma.csv");
            if (!fs::exists(pred_file)) {
                throw InvalidInput("missing prediction file " + pred_file.string());
            }
            pred = read_indicator(pred_file);
            if (pred.size() != truth.size()) {
                throw InvalidInput(pred_file.string() + ": prediction length " +
                                   std::to_string(pred.size()) + " does not match truth length " +
                                   std::to_string(truth.size()));
            }
        }

        const double m = mcc(truth, pred);
        const double a = ari(segment_labels_unchecked(truth), segment_labels_unchecked(pred));
        const ConfusionMatrix cm = windowed_match(truth, pred, opt.window);
        mccs.push_back(m);
        aris.push_back(a);
        csv += stem + ',' + opt.method + ',' + std::to_string(chain.size()) + ',' +
               std::to_string(landmark_count(truth)) + ',' + std::to_string(landmark_count(pred)) +
               ',' + format_double(m) + ',' + format_double(a) + ',' + std::to_string(cm.tp) + ',' +
               std::to_string(cm.fp) + ',' + std::to_string(cm.fn) + ',' + std::to_string(cm.tn) +
               '\n';
    }
    atomic_write(out_dir / "metrics.csv", csv);

    const double med_mcc = median(mccs);
    const double med_ari = median(aris);
    std::string medians = "method,files,median_mcc,median_ari\n";
    medians += opt.method + ',' + std::to_string(mccs.size()) + ',' + format_double(med_mcc) +
               ',' + format_double(med_ari) + '\n';
    atomic_write(out_dir / "medians.csv", medians);

    std::cout << "evaluate: " << mccs.size() << " file(s), method=" << opt.method
              << " median_mcc=" << format_double(med_mcc)
              << " median_ari=" << format_double(med_ari) << '\n';
    return 0;
}

}  // namespace lasa::cli
