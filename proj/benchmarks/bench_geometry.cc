#include <benchmark/benchmark.h>

#include "lasa/geometry.hpp"
#include "lasa/rng.hpp"
#include "lasa/simulate.hpp"

namespace {

lasa::PolygonalChain make_chain_of(int n) {
    lasa::Rng rng(7);
    const double sigma2 = 2.0e4 / (static_cast<double>(n) * n);
    const lasa::SimScenario scenario{6, n, sigma2, false, 1, 7};
    return lasa::simulate_dataset(scenario, rng).chain;
}

void BM_SelfIntersection(benchmark::State& state) {
    const lasa::PolygonalChain chain = make_chain_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lasa::is_self_intersecting(chain.vertices));
    }
}

void BM_ConvexHull(benchmark::State& state) {
    const lasa::PolygonalChain chain = make_chain_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lasa::convex_hull(chain));
    }
}

void BM_PointInPolygon(benchmark::State& state) {
    const lasa::PolygonalChain chain = make_chain_of(static_cast<int>(state.range(0)));
    lasa::Rng rng(11);
    for (auto _ : state) {
        const lasa::Point2 p{rng.uniform_range(-0.5, 0.5), rng.uniform_range(-0.5, 0.5)};
        benchmark::DoNotOptimize(lasa::point_in_polygon(p, chain.vertices));
    }
}

}  // namespace

BENCHMARK(BM_SelfIntersection)->Arg(140)->Arg(500);
BENCHMARK(BM_ConvexHull)->Arg(140)->Arg(500)->Arg(5000);
BENCHMARK(BM_PointInPolygon)->Arg(140)->Arg(5000);
