#include "lasa/indicator.hpp"

#include <algorithm>

#include "lasa/errors.hpp"

namespace lasa {

int landmark_count(const LandmarkIndicator& gamma) {
    int k = 0;
    for (std::uint8_t g : gamma) k += (g != 0);
    return k;
}

std::vector<int> landmark_positions(const LandmarkIndicator& gamma) {
    std::vector<int> pos;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i]) pos.push_back(static_cast<int>(i));
    }
    return pos;
}

bool has_adjacent_landmarks(const LandmarkIndicator& gamma) {
    const std::size_t m = gamma.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (gamma[i] && gamma[(i + 1) % m]) return true;
    }
    return false;
}

bool is_structurally_valid(const LandmarkIndicator& gamma) {
    return landmark_count(gamma) >= 3 && !has_adjacent_landmarks(gamma);
}

std::vector<Point2> landmark_polygon(const PolygonalChain& chain, const LandmarkIndicator& gamma) {
    std::vector<Point2> poly;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i]) poly.push_back(chain.vertices[i]);
    }
    return poly;
}

bool is_valid_gamma(const LandmarkIndicator& gamma, const PolygonalChain& chain) {
    if (gamma.size() != chain.size()) return false;
    if (!is_structurally_valid(gamma)) return false;
    const std::vector<Point2> poly = landmark_polygon(chain, gamma);
    // Coincident landmarks make the landmark chain degenerate.
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == poly[(i + 1) % poly.size()]) return false;
    }
    return !is_self_intersecting(poly);
}

SegmentLabels gamma_to_z(const LandmarkIndicator& gamma) {
    if (!is_structurally_valid(gamma)) {
        throw ConstraintViolation("gamma_to_z requires a structurally valid indicator");
    }
    return segment_labels_unchecked(gamma);
}

SegmentLabels segment_labels_unchecked(const LandmarkIndicator& gamma) {
    const std::size_t m = gamma.size();
    const int k = landmark_count(gamma);
    if (k < 1) throw ConstraintViolation("segment labels need at least one landmark");
    SegmentLabels z(m);
    int cum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        cum += (gamma[i] != 0);
        z[i] = cum == 0 ? k : cum;
    }
    return z;
}

LandmarkIndicator z_to_gamma(const SegmentLabels& z) {
    const std::size_t m = z.size();
    if (m == 0) throw ConstraintViolation("empty segment labels");
    LandmarkIndicator gamma(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int diff = z[i] - z[(i + m - 1) % m];
        if (diff == 0) {
            gamma[i] = 0;
        } else if (diff == 1 || diff < 0) {
            gamma[i] = 1;
        } else {
            throw ConstraintViolation("segment labels jump by more than one");
        }
    }
    if (!is_structurally_valid(gamma)) {
        throw ConstraintViolation("segment labels decode to an invalid indicator");
    }
    // Contiguous-run check: re-encoding must reproduce the input.
    if (segment_labels_unchecked(gamma) != z) {
        throw ConstraintViolation("segment labels are not contiguous circular runs");
    }
    return gamma;
}

LandmarkIndicator shift_indicator(const LandmarkIndicator& gamma, int s) {
    const int m = static_cast<int>(gamma.size());
    LandmarkIndicator out(gamma.size());
    for (int i = 0; i < m; ++i) {
        out[((i + s) % m + m) % m] = gamma[i];
    }
    return out;
}

}  // namespace lasa
