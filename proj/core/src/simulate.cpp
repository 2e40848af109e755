#include "lasa/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lasa/errors.hpp"

namespace lasa {

namespace {
constexpr double kEdgeMin = 50.0;
constexpr double kEdgeMax = 100.0;
constexpr int kPolygonAttempts = 10000;
constexpr int kPerturbAttempts = 1000;
constexpr double kPi = 3.141592653589793238462643383279502884;

// Largest-remainder apportionment of `total` points over the edges,
// proportional to edge length, with at least one point per edge.
std::vector<int> apportion(const std::vector<double>& lengths, int total) {
    const int k = static_cast<int>(lengths.size());
    const double perimeter = std::accumulate(lengths.begin(), lengths.end(), 0.0);
    std::vector<int> counts(k, 1);
    int remaining = total - k;
    if (remaining < 0) throw InvalidInput("not enough vertices to cover every edge");

    std::vector<double> quota(k);
    for (int e = 0; e < k; ++e) {
        quota[e] = lengths[e] / perimeter * remaining;
        const int base = static_cast<int>(std::floor(quota[e]));
        counts[e] += base;
        quota[e] -= base;
    }
    int assigned = std::accumulate(counts.begin(), counts.end(), 0);
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return quota[a] > quota[b]; });
    for (int i = 0; assigned < total; ++i, ++assigned) {
        ++counts[order[i % k]];
    }
    return counts;
}
}  // namespace

void SimScenario::validate() const {
    if (k_true < 3) throw ConfigError("k_true must be at least 3");
    if (n <= 2 * k_true) throw ConfigError("n must exceed 2 * k_true");
    if (sigma2 < 0.0) throw ConfigError("sigma2 must be non-negative");
    if (replicates < 1) throw ConfigError("replicates must be positive");
}

std::vector<Point2> generate_polygon(int k, bool equilateral, Rng& rng) {
    if (k < 3) throw ConfigError("polygon needs at least 3 corners");

    for (int attempt = 0; attempt < kPolygonAttempts; ++attempt) {
        std::vector<double> lengths(k);
        if (equilateral) {
            std::fill(lengths.begin(), lengths.end(), rng.uniform_range(kEdgeMin, kEdgeMax));
        } else {
            for (double& l : lengths) l = rng.uniform_range(kEdgeMin, kEdgeMax);
        }

        // Random walk over the first k-2 edges; the last two close the gap
        // exactly as the two free sides of a triangle.
        std::vector<Point2> pts{{0.0, 0.0}};
        for (int e = 0; e < k - 2; ++e) {
            const double theta = rng.uniform_range(0.0, 2.0 * kPi);
            pts.push_back(pts.back() + Point2{lengths[e] * std::cos(theta),
                                              lengths[e] * std::sin(theta)});
        }
        const Point2 gap = Point2{0.0, 0.0} - pts.back();
        const double g = norm(gap);
        const double la = lengths[k - 2];
        const double lb = lengths[k - 1];
        if (g < 1e-9 || g > la + lb - 1e-9 || g < std::abs(la - lb) + 1e-9) continue;

        // Apex of the closing triangle; mirror side chosen at random.
        const double along = (la * la - lb * lb + g * g) / (2.0 * g);
        const double h2 = la * la - along * along;
        if (h2 <= 0.0) continue;
        const double h = std::sqrt(h2) * (rng.uniform() < 0.5 ? 1.0 : -1.0);
        const Point2 dir{gap.x / g, gap.y / g};
        const Point2 perp{-dir.y, dir.x};
        pts.push_back(pts.back() + along * dir + h * perp);

        if (static_cast<int>(pts.size()) != k) continue;
        bool degenerate = false;
        for (int i = 0; i < k && !degenerate; ++i) {
            degenerate = pts[i] == pts[(i + 1) % k];
        }
        if (degenerate || is_self_intersecting(pts)) continue;
        return pts;
    }
    throw GenerationError("failed to generate a simple polygon in " +
                          std::to_string(kPolygonAttempts) + " attempts");
}

SimulatedDataset bin_and_perturb(const std::vector<Point2>& polygon, int n, double sigma2,
                                 Rng& rng) {
    const int k = static_cast<int>(polygon.size());
    const int m = n - 1;  // distinct vertices of the closed chain
    if (n <= 2 * k) throw InvalidInput("n must exceed 2 * k");
    const double sigma = std::sqrt(sigma2);

    std::vector<double> lengths(k);
    for (int e = 0; e < k; ++e) {
        lengths[e] = distance(polygon[e], polygon[(e + 1) % k]);
    }
    const std::vector<int> counts = apportion(lengths, m - k);

    for (int attempt = 0; attempt < kPerturbAttempts; ++attempt) {
        std::vector<Point2> vertices;
        LandmarkIndicator gamma;
        vertices.reserve(m);
        gamma.reserve(m);
        for (int e = 0; e < k; ++e) {
            const Point2 a = polygon[e];
            const Point2 b = polygon[(e + 1) % k];
            const Point2 edge = b - a;
            const double len = norm(edge);
            const Point2 unit_perp{-edge.y / len, edge.x / len};
            vertices.push_back(a);
            gamma.push_back(1);
            for (int j = 1; j <= counts[e]; ++j) {
                const double t = static_cast<double>(j) / (counts[e] + 1);
                const double displacement = sigma > 0.0 ? rng.normal(0.0, sigma) : 0.0;
                vertices.push_back(a + t * edge + displacement * unit_perp);
                gamma.push_back(0);
            }
        }
        if (is_self_intersecting(vertices)) continue;

        const PolygonalChain raw = make_chain(std::move(vertices));
        const double raw_length = chain_length(raw);
        PolygonalChain chain = normalize(raw);

        // Random start vertex; the indicator rotates along.
        const int r = static_cast<int>(rng.uniform_below(m));
        std::rotate(chain.vertices.begin(), chain.vertices.begin() + r, chain.vertices.end());
        std::rotate(gamma.begin(), gamma.begin() + r, gamma.end());

        SimulatedDataset ds{std::move(chain), std::move(gamma), {}, raw_length};
        ds.scenario.k_true = k;
        ds.scenario.n = n;
        ds.scenario.sigma2 = sigma2;
        return ds;
    }
    throw GenerationError("perpendicular noise kept self-intersecting the chain after " +
                          std::to_string(kPerturbAttempts) + " attempts");
}

SimulatedDataset simulate_dataset(const SimScenario& scenario, Rng& rng) {
    scenario.validate();
    // A polygon with sharp corners can leave no room for heavy noise; draw
    // a fresh one when the displacement budget runs out.
    constexpr int kDatasetAttempts = 100;
    for (int attempt = 0; attempt < kDatasetAttempts; ++attempt) {
        const std::vector<Point2> polygon =
            generate_polygon(scenario.k_true, scenario.equilateral, rng);
        try {
            SimulatedDataset ds = bin_and_perturb(polygon, scenario.n, scenario.sigma2, rng);
            ds.scenario = scenario;
            return ds;
        } catch (const GenerationError&) {
            continue;
        }
    }
    throw GenerationError("no polygon admitted a simple perturbed chain after " +
                          std::to_string(kDatasetAttempts) + " attempts");
}

}  // namespace lasa
