#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lasa/features.hpp"
#include "lasa/geometry.hpp"
#include "lasa/indicator.hpp"
#include "lasa/posterior.hpp"
#include "lasa/sampler.hpp"
#include "lasa/summaries.hpp"

namespace lasa {

// Shortest round-trip decimal representation; NaN renders as the empty
// string so undefined feature cells stay blank in CSV output.
std::string format_double(double value);

// Writes via a temporary file in the same directory, then renames.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// Reads a boundary file. Formats: "csv" (x,y per line, optional header)
// and "json" (top-level array of [x, y] pairs); "auto" picks by extension.
// A trailing vertex equal to the first and consecutive duplicate points
// are dropped with a warning on stderr. Throws ParseError with the line
// number on malformed rows and InvalidInput on chains with fewer than 3
// distinct vertices.
PolygonalChain read_chain(const std::filesystem::path& path, std::string_view format = "auto");

void write_chain_csv(const std::filesystem::path& path, const PolygonalChain& chain);

// Indicator files: one 0/1 per line, optional "gamma" header.
LandmarkIndicator read_indicator(const std::filesystem::path& path);
void write_indicator(const std::filesystem::path& path, const LandmarkIndicator& gamma);

// Reproducibility record written next to every command's outputs. The
// timestamp honors SOURCE_DATE_EPOCH when set so runs can be compared
// byte for byte.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    std::string out_dir;
    Hyperparameters hyper;
    bool has_hyper = false;
    SamplerConfig sampler;
    bool has_sampler = false;
    std::uint64_t seed = 0;
    double raw_length = 0.0;  // normalization scale of the input chain
    Point2 raw_centroid;
    std::vector<std::string> extra;  // command-specific "key=value" entries
    std::vector<std::string> outputs;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

// Landmark-detection result; landmark indices are 1-based in the written
// report to match the usual vertex numbering.
struct DetectionReport {
    std::string input;
    int n_vertices = 0;
    double raw_length = 0.0;
    Point2 raw_centroid;
    LandmarkEstimate estimate;
    std::vector<SegmentFeatureRow> segment_features;  // for the MAP estimate
    std::vector<const McmcTrace*> traces;
};

void write_detection_report(const std::filesystem::path& path, const DetectionReport& report);

// Feature CSVs shared by the detect and features commands.
void write_segment_features_csv(const std::filesystem::path& path, const std::string& chain_id,
                                std::span<const SegmentFeatureRow> rows);
void write_chain_features_csv(const std::filesystem::path& path,
                              std::span<const std::string> chain_ids,
                              std::span<const int> n_vertices,
                              std::span<const ChainFeatures> features);

// Current timestamp as UTC ISO-8601, or SOURCE_DATE_EPOCH when present.
std::string run_timestamp();

extern const char* const kVersion;

}  // namespace lasa
