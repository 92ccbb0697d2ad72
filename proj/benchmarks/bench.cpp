#include <random>

#include <benchmark/benchmark.h>

#include "nfp/convex_nfp.hpp"
#include "nfp/fixtures.hpp"
#include "nfp/merge.hpp"
#include "nfp/oracle.hpp"

using namespace nfp;

static void BM_ConvexNfp(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const Piece a = random_convex_piece(rng, static_cast<int>(state.range(0)), 50.0);
    const Piece b = random_convex_piece(rng, static_cast<int>(state.range(0)), 50.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convex_nfp(a.outer, b.outer, b.reference, 1e-7));
    }
}
BENCHMARK(BM_ConvexNfp)->Arg(6)->Arg(10);

static void BM_GenNfpStars(benchmark::State& state) {
    std::mt19937_64 rng(8);
    const Piece a = random_star_piece(rng, static_cast<int>(state.range(0)), 0.6, 2.0);
    const Piece b = random_star_piece(rng, 6, 0.4, 1.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_nfp(a, b));
    }
}
BENCHMARK(BM_GenNfpStars)->Arg(6)->Arg(10)->Arg(16);

static void BM_GenNfpPocketFixture(benchmark::State& state) {
    const FixtureCase c = builtin_fixtures()[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_nfp(c.stationary, c.orbital));
    }
}
BENCHMARK(BM_GenNfpPocketFixture)->Arg(0)->Arg(1)->Arg(4);

static void BM_IntersectionArea(benchmark::State& state) {
    std::mt19937_64 rng(9);
    const Piece a = random_star_piece(rng, 10, 0.6, 2.0);
    const Piece b = random_star_piece(rng, 8, 0.4, 1.5);
    const ConvexDecomposition da = decompose(a, 1e-9);
    const ConvexDecomposition db = decompose(b, 1e-9);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersection_area(da, db, {t, 0.1}, 1e-9));
        t += 1e-3;
    }
}
BENCHMARK(BM_IntersectionArea);

BENCHMARK_MAIN();
