#include "lasa/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lasa/errors.hpp"

namespace lasa {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> defined_only(std::span<const double> values) {
    std::vector<double> out;
    for (double v : values) {
        if (!std::isnan(v)) out.push_back(v);
    }
    return out;
}
}  // namespace

PiecewiseDistances piecewise_distances(const PolygonalChain& chain, const LandmarkIndicator& gamma) {
    if (!is_valid_gamma(gamma, chain)) {
        throw ConstraintViolation("piecewise_distances requires a valid indicator for the chain");
    }
    const std::vector<int> landmarks = landmark_positions(gamma);
    const std::vector<Point2> poly = landmark_polygon(chain, gamma);
    const int m = static_cast<int>(chain.size());
    const int k = static_cast<int>(landmarks.size());

    PiecewiseDistances out;
    for (int s = 0; s < k; ++s) {
        const int begin = landmarks[s];
        const int end = landmarks[(s + 1) % k];
        const LineCoefficients line = line_through(chain.vertices[begin], chain.vertices[end]);
        std::vector<double> d_star;
        for (int i = (begin + 1) % m; i != end; i = (i + 1) % m) {
            const bool inside = point_in_polygon(chain.vertices[i], poly);
            d_star.push_back(signed_distance(chain.vertices[i], line, inside));
        }
        out.segment_begin.push_back(begin);
        out.segments.push_back(std::move(d_star));
    }
    return out;
}

RoughnessVector roughness_measures(std::span<const double> d_star) {
    const std::size_t n_k = d_star.size();
    if (n_k == 0) throw InvalidInput("roughness_measures needs at least one distance");

    RoughnessVector r;
    double sum_abs = 0.0, sum2 = 0.0, sum3 = 0.0, sum4 = 0.0;
    double dmin = d_star[0], dmax = d_star[0];
    for (double d : d_star) {
        sum_abs += std::abs(d);
        const double d2 = d * d;
        sum2 += d2;
        sum3 += d2 * d;
        sum4 += d2 * d2;
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    const double n = static_cast<double>(n_k);
    r.ra = sum_abs / n;
    r.rq = std::sqrt(sum2 / n);
    r.rv = std::abs(dmin);
    r.rp = dmax;
    r.rz = r.rv + r.rp;
    if (r.rq > 0.0) {
        r.rsk = sum3 / (n * r.rq * r.rq * r.rq);
        r.rku = sum4 / (n * r.rq * r.rq * r.rq * r.rq);
    } else {
        r.rsk = kNaN;
        r.rku = kNaN;
    }

    // Peak-to-valley pairs are taken disjoint; with fewer than ten points
    // this uses the floor(n_k/2) available pairs instead of five.
    const std::size_t pairs = std::min<std::size_t>(5, n_k / 2);
    if (pairs == 0) {
        r.rzjis = kNaN;
    } else {
        std::vector<double> sorted(d_star.begin(), d_star.end());
        std::sort(sorted.begin(), sorted.end());
        double total = 0.0;
        for (std::size_t i = 0; i < pairs; ++i) {
            total += sorted[n_k - 1 - i] - sorted[i];
        }
        r.rzjis = total / static_cast<double>(pairs);
    }
    return r;
}

std::vector<std::uint8_t> sign_states(std::span<const double> d_star) {
    std::vector<std::uint8_t> states;
    states.reserve(d_star.size());
    for (double d : d_star) states.push_back(d >= 0.0 ? 1 : 0);
    return states;
}

TransitionFeatures transition_probabilities(std::span<const std::uint8_t> states) {
    if (states.size() < 2) {
        throw InvalidInput("transition_probabilities needs at least two states");
    }
    int from_p = 0, pp = 0, from_m = 0, mm = 0;
    for (std::size_t i = 0; i + 1 < states.size(); ++i) {
        if (states[i]) {
            ++from_p;
            pp += states[i + 1];
        } else {
            ++from_m;
            mm += !states[i + 1];
        }
    }
    TransitionFeatures t;
    if (from_p > 0) {
        t.a_pp = static_cast<double>(pp) / from_p;
        t.a_pm = 1.0 - t.a_pp;
    } else {
        t.a_pp = t.a_pm = kNaN;
    }
    if (from_m > 0) {
        t.a_mm = static_cast<double>(mm) / from_m;
        t.a_mp = 1.0 - t.a_mm;
    } else {
        t.a_mp = t.a_mm = kNaN;
    }
    return t;
}

std::vector<double> radial_distances(const PolygonalChain& chain) {
    const Point2 c = centroid(chain);
    std::vector<double> r;
    r.reserve(chain.size());
    for (const Point2& v : chain.vertices) r.push_back(distance(v, c));
    return r;
}

int zero_crossing_count(std::span<const double> r) {
    const std::size_t m = r.size();
    if (m < 2) throw InvalidInput("zero_crossing_count needs at least two values");
    double mean = 0.0;
    for (double v : r) mean += v;
    mean /= static_cast<double>(m);
    int count = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if ((r[i] - mean) * (r[(i + 1) % m] - mean) < 0.0) ++count;
    }
    return count;
}

double tumor_boundary_roughness(std::span<const double> r, int window) {
    const int m = static_cast<int>(r.size());
    if (window < 2) throw InvalidInput("TBR window must be at least 2");
    if (window > m) throw InvalidInput("TBR window exceeds the vertex count");
    const int n_windows = (m + window - 1) / window;
    double total = 0.0;
    for (int j = 0; j < n_windows; ++j) {
        const int begin = j * window;
        const int end = std::min((j + 1) * window, m);
        for (int i = begin; i + 1 < end; ++i) {
            total += std::abs(r[i + 1] - r[i]);
        }
    }
    return total / static_cast<double>(n_windows);
}

MomentSummary summarize_moments(std::span<const double> values) {
    const std::vector<double> xs = defined_only(values);
    if (xs.empty()) throw InvalidInput("summarize_moments needs at least one defined value");

    MomentSummary s;
    s.count = static_cast<int>(xs.size());
    const double n = static_cast<double>(xs.size());
    for (double v : xs) s.mean += v;
    s.mean /= n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : xs) {
        const double d = v - s.mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    s.sd = xs.size() > 1 ? std::sqrt(m2 / (n - 1.0)) : 0.0;
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (xs.size() >= 3 && m2 > 0.0) {
        s.skewness = m3 / std::pow(m2, 1.5);
        s.kurtosis = m4 / (m2 * m2);
    } else {
        s.skewness = kNaN;
        s.kurtosis = kNaN;
    }
    return s;
}

std::vector<SegmentFeatureRow> compute_segment_features(const PolygonalChain& chain,
                                                        const LandmarkIndicator& gamma) {
    const PiecewiseDistances pw = piecewise_distances(chain, gamma);
    std::vector<SegmentFeatureRow> rows;
    rows.reserve(pw.segments.size());
    for (std::size_t s = 0; s < pw.segments.size(); ++s) {
        SegmentFeatureRow row;
        row.segment = static_cast<int>(s) + 1;
        row.n_k = static_cast<int>(pw.segments[s].size());
        row.rough = roughness_measures(pw.segments[s]);
        if (row.n_k >= 2) {
            row.trans = transition_probabilities(sign_states(pw.segments[s]));
        } else {
            row.trans = {kNaN, kNaN, kNaN, kNaN};
        }
        rows.push_back(row);
    }
    return rows;
}

ChainFeatures compute_chain_features(const PolygonalChain& chain, const LandmarkIndicator& gamma,
                                     double raw_area, std::span<const int> tbr_windows) {
    const std::vector<SegmentFeatureRow> rows = compute_segment_features(chain, gamma);

    ChainFeatures f;
    f.k = landmark_count(gamma);
    f.area = raw_area;
    const std::vector<double> radial = radial_distances(chain);
    f.zcc = zero_crossing_count(radial);
    for (int window : tbr_windows) {
        f.tbr.emplace_back(window, tumor_boundary_roughness(radial, window));
    }

    auto moments_of = [&rows](auto getter) {
        std::vector<double> values;
        values.reserve(rows.size());
        for (const SegmentFeatureRow& row : rows) values.push_back(getter(row));
        if (defined_only(values).empty()) {
            return MomentSummary{kNaN, kNaN, kNaN, kNaN, 0};  // feature undefined on every segment
        }
        return summarize_moments(values);
    };
    f.ra = moments_of([](const auto& r) { return r.rough.ra; });
    f.rq = moments_of([](const auto& r) { return r.rough.rq; });
    f.rv = moments_of([](const auto& r) { return r.rough.rv; });
    f.rp = moments_of([](const auto& r) { return r.rough.rp; });
    f.rz = moments_of([](const auto& r) { return r.rough.rz; });
    f.rsk = moments_of([](const auto& r) { return r.rough.rsk; });
    f.rku = moments_of([](const auto& r) { return r.rough.rku; });
    f.rzjis = moments_of([](const auto& r) { return r.rough.rzjis; });
    f.a_pp = moments_of([](const auto& r) { return r.trans.a_pp; });
    f.a_pm = moments_of([](const auto& r) { return r.trans.a_pm; });
    f.a_mp = moments_of([](const auto& r) { return r.trans.a_mp; });
    f.a_mm = moments_of([](const auto& r) { return r.trans.a_mm; });
    return f;
}

}  // namespace lasa
