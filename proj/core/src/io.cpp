#include "lasa/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lasa/errors.hpp"

namespace lasa {

using ordered_json = nlohmann::ordered_json;

const char* const kVersion = "0.1.0";

std::string format_double(double value) {
    if (std::isnan(value)) return "";
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, end);
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw InvalidInput("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

namespace {

bool parse_double(std::string_view text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r')) --end;
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && begin != end;
}

std::vector<Point2> read_points_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::vector<Point2> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (view.empty()) continue;
        const std::size_t comma = view.find(',');
        if (comma == std::string_view::npos) {
            throw ParseError(path.string(), lineno, "expected 'x,y'");
        }
        Point2 p;
        const bool ok = parse_double(view.substr(0, comma), p.x) &&
                        parse_double(view.substr(comma + 1), p.y);
        if (!ok) {
            if (lineno == 1 && pts.empty()) continue;  // header row
            throw ParseError(path.string(), lineno, "unparseable coordinates '" +
                                                        std::string(view) + "'");
        }
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw ParseError(path.string(), lineno, "non-finite coordinate");
        }
        pts.push_back(p);
    }
    return pts;
}

std::vector<Point2> read_points_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(path.string(), 0, e.what());
    }
    if (!doc.is_array()) throw InvalidInput(path.string() + ": expected a top-level array");
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& entry = doc[i];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw ParseError(path.string(), i + 1, "expected [x, y]");
        }
        const Point2 p{entry[0].get<double>(), entry[1].get<double>()};
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw ParseError(path.string(), i + 1, "non-finite coordinate");
        }
        pts.push_back(p);
    }
    return pts;
}

ordered_json hyper_json(const Hyperparameters& h) {
    return ordered_json{{"alpha_omega", h.alpha_omega},
                        {"beta_omega", h.beta_omega},
                        {"alpha_sigma", h.alpha_sigma},
                        {"beta_sigma", h.beta_sigma},
                        {"k_hat", h.k_hat}};
}

ordered_json sampler_json(const SamplerConfig& c) {
    return ordered_json{{"iterations", c.iterations},
                        {"burnin_fraction", c.burnin_fraction},
                        {"special_move_period", c.special_move_period},
                        {"shift_magnitude", c.shift_magnitude},
                        {"seed", c.seed},
                        {"n_chains", c.n_chains}};
}

ordered_json move_stats_json(const MoveStats& s) {
    return ordered_json{{"proposed", s.proposed}, {"accepted", s.accepted}};
}

std::vector<int> one_based(const std::vector<int>& indices) {
    std::vector<int> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(i + 1);
    return out;
}

}  // namespace

PolygonalChain read_chain(const std::filesystem::path& path, std::string_view format) {
    std::string fmt(format);
    if (fmt == "auto") {
        const std::string ext = path.extension().string();
        fmt = (ext == ".json") ? "json" : "csv";
    }
    std::vector<Point2> pts;
    if (fmt == "csv") {
        pts = read_points_csv(path);
    } else if (fmt == "json") {
        pts = read_points_json(path);
    } else {
        throw ConfigError("unknown chain format '" + fmt + "' (expected csv or json)");
    }
    if (pts.size() >= 2 && pts.front() == pts.back()) {
        std::cerr << "warning: " << path.string()
                  << ": dropping trailing vertex equal to the first (closure is implicit)\n";
        pts.pop_back();
    }
    std::vector<Point2> cleaned;
    for (const Point2& p : pts) {
        if (!cleaned.empty() && cleaned.back() == p) {
            std::cerr << "warning: " << path.string() << ": dropping consecutive duplicate vertex\n";
            continue;
        }
        cleaned.push_back(p);
    }
    return make_chain(std::move(cleaned));
}

void write_chain_csv(const std::filesystem::path& path, const PolygonalChain& chain) {
    std::string out = "x,y\n";
    for (const Point2& v : chain.vertices) {
        out += format_double(v.x) + ',' + format_double(v.y) + '\n';
    }
    atomic_write(path, out);
}

LandmarkIndicator read_indicator(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path.string());
    LandmarkIndicator gamma;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view(line);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (view.empty()) continue;
        if (view == "0") {
            gamma.push_back(0);
        } else if (view == "1") {
            gamma.push_back(1);
        } else if (lineno == 1 && view == "gamma") {
            continue;
        } else {
            throw ParseError(path.string(), lineno, "expected 0 or 1, got '" + std::string(view) + "'");
        }
    }
    if (gamma.empty()) throw InvalidInput(path.string() + ": empty indicator file");
    return gamma;
}

void write_indicator(const std::filesystem::path& path, const LandmarkIndicator& gamma) {
    std::string out = "gamma\n";
    for (std::uint8_t g : gamma) {
        out += g ? "1\n" : "0\n";
    }
    atomic_write(path, out);
}

std::string run_timestamp() {
    std::time_t t;
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    } else {
        t = std::time(nullptr);
    }
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    ordered_json doc;
    doc["artifact"] = "lasa";
    doc["version"] = kVersion;
    doc["created_utc"] = run_timestamp();
    doc["command"] = manifest.command;
    doc["inputs"] = manifest.inputs;
    doc["out_dir"] = manifest.out_dir;
    doc["seed"] = manifest.seed;
    if (manifest.has_hyper) doc["hyperparameters"] = hyper_json(manifest.hyper);
    if (manifest.has_sampler) doc["sampler"] = sampler_json(manifest.sampler);
    if (manifest.raw_length > 0.0) {
        doc["normalization"] = ordered_json{{"raw_length", manifest.raw_length},
                                            {"raw_centroid",
                                             {manifest.raw_centroid.x, manifest.raw_centroid.y}}};
    }
    if (!manifest.extra.empty()) doc["settings"] = manifest.extra;
    doc["outputs"] = manifest.outputs;
    atomic_write(path, doc.dump(2) + "\n");
}

void write_detection_report(const std::filesystem::path& path, const DetectionReport& report) {
    ordered_json doc;
    doc["input"] = report.input;
    doc["n_vertices"] = report.n_vertices;
    doc["normalization"] = ordered_json{{"raw_length", report.raw_length},
                                        {"raw_centroid",
                                         {report.raw_centroid.x, report.raw_centroid.y}}};

    const LandmarkEstimate& est = report.estimate;
    doc["map"] = ordered_json{{"k", landmark_count(est.gamma_map)},
                              {"landmarks", one_based(landmark_positions(est.gamma_map))},
                              {"log_posterior", est.map_log_post}};
    doc["ppm"] = ordered_json{{"k", landmark_count(est.gamma_ppm)},
                              {"landmarks", one_based(landmark_positions(est.gamma_ppm))}};

    ordered_json intervals = ordered_json::array();
    const int m = report.n_vertices;
    for (const CredibleInterval& ci : est.intervals) {
        // Unwrapped bounds can step past the chain ends; report both the
        // raw bounds and their wrapped vertex indices.
        intervals.push_back(ordered_json{{"landmark", ci.landmark + 1},
                                         {"lo", ((ci.lo % m + m) % m) + 1},
                                         {"hi", ((ci.hi % m + m) % m) + 1},
                                         {"wraps", ci.lo < 0 || ci.hi >= m}});
    }
    doc["credible_intervals"] = intervals;

    ordered_json segs = ordered_json::array();
    for (const SegmentFeatureRow& row : report.segment_features) {
        auto opt = [](double v) {
            return std::isnan(v) ? ordered_json(nullptr) : ordered_json(v);
        };
        segs.push_back(ordered_json{{"segment", row.segment},
                                    {"n_k", row.n_k},
                                    {"ra", row.rough.ra},
                                    {"rq", row.rough.rq},
                                    {"rv", row.rough.rv},
                                    {"rp", row.rough.rp},
                                    {"rz", row.rough.rz},
                                    {"rsk", opt(row.rough.rsk)},
                                    {"rku", opt(row.rough.rku)},
                                    {"rzjis", opt(row.rough.rzjis)},
                                    {"a_pp", opt(row.trans.a_pp)},
                                    {"a_pm", opt(row.trans.a_pm)},
                                    {"a_mp", opt(row.trans.a_mp)},
                                    {"a_mm", opt(row.trans.a_mm)}});
    }
    doc["segment_features"] = segs;

    ordered_json chains = ordered_json::array();
    for (const McmcTrace* trace : report.traces) {
        chains.push_back(ordered_json{{"seed", trace->seed},
                                      {"iterations", trace->iterations},
                                      {"burnin", trace->burnin},
                                      {"samples", trace->samples.size()},
                                      {"add_delete", move_stats_json(trace->add_delete)},
                                      {"swap", move_stats_json(trace->swap)},
                                      {"shift", move_stats_json(trace->shift)}});
    }
    doc["chains"] = chains;
    atomic_write(path, doc.dump(2) + "\n");
}

void write_segment_features_csv(const std::filesystem::path& path, const std::string& chain_id,
                                std::span<const SegmentFeatureRow> rows) {
    std::string out = "chain,segment,n_k,ra,rq,rv,rp,rz,rsk,rku,rzjis,a_pp,a_pm,a_mp,a_mm\n";
    for (const SegmentFeatureRow& row : rows) {
        out += chain_id + ',' + std::to_string(row.segment) + ',' + std::to_string(row.n_k) + ',' +
               format_double(row.rough.ra) + ',' + format_double(row.rough.rq) + ',' +
               format_double(row.rough.rv) + ',' + format_double(row.rough.rp) + ',' +
               format_double(row.rough.rz) + ',' + format_double(row.rough.rsk) + ',' +
               format_double(row.rough.rku) + ',' + format_double(row.rough.rzjis) + ',' +
               format_double(row.trans.a_pp) + ',' + format_double(row.trans.a_pm) + ',' +
               format_double(row.trans.a_mp) + ',' + format_double(row.trans.a_mm) + '\n';
    }
    atomic_write(path, out);
}

void write_chain_features_csv(const std::filesystem::path& path,
                              std::span<const std::string> chain_ids,
                              std::span<const int> n_vertices,
                              std::span<const ChainFeatures> features) {
    if (chain_ids.size() != features.size() || n_vertices.size() != features.size()) {
        throw InternalError("chain feature row mismatch");
    }
    std::string out = "chain,n_vertices,k,area,zcc";
    if (!features.empty()) {
        for (const auto& [window, value] : features.front().tbr) {
            out += ",tbr_l" + std::to_string(window);
        }
    }
    static constexpr const char* kNames[] = {"ra",    "rq",   "rv",   "rp",   "rz",   "rsk",
                                             "rku",   "rzjis", "a_pp", "a_pm", "a_mp", "a_mm"};
    for (const char* name : kNames) {
        out += std::string(",") + name + "_mean," + name + "_sd," + name + "_skewness," + name +
               "_kurtosis";
    }
    out += '\n';

    for (std::size_t i = 0; i < features.size(); ++i) {
        const ChainFeatures& f = features[i];
        out += chain_ids[i] + ',' + std::to_string(n_vertices[i]) + ',' + std::to_string(f.k) +
               ',' + format_double(f.area) + ',' + std::to_string(f.zcc);
        for (const auto& [window, value] : f.tbr) {
            out += ',' + format_double(value);
        }
        const MomentSummary* moments[] = {&f.ra,  &f.rq,    &f.rv,   &f.rp,   &f.rz,   &f.rsk,
                                          &f.rku, &f.rzjis, &f.a_pp, &f.a_pm, &f.a_mp, &f.a_mm};
        for (const MomentSummary* ms : moments) {
            out += ',' + format_double(ms->mean) + ',' + format_double(ms->sd) + ',' +
                   format_double(ms->skewness) + ',' + format_double(ms->kurtosis);
        }
        out += '\n';
    }
    atomic_write(path, out);
}

}  // namespace lasa
