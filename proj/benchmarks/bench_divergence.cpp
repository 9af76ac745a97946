// Copyright (c) 2026 the gdiv authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "gdiv/catalog.hpp"
#include "gdiv/centroid.hpp"
#include "gdiv/divergence.hpp"
#include "gdiv/rng.hpp"

namespace {

using namespace gdiv;

Point random_point(TrialRng& rng, std::size_t dim) {
    std::vector<double> c(dim);
    for (auto& ci : c) ci = rng.uniform(0.1, 10.0);
    return Point(std::move(c));
}

void bm_g_bregman(benchmark::State& state, const char* key) {
    const auto entry = get_entry(key);
    const auto dim = static_cast<std::size_t>(state.range(0));
    TrialRng rng(0, 0, fnv1a64("bench_pair"));
    const Point p = random_point(rng, dim);
    const Point q = random_point(rng, dim);
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_bregman(entry.spec, p, q));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dim));
}

void bm_skew_jensen(benchmark::State& state) {
    const auto entry = get_entry("kl");
    const auto dim = static_cast<std::size_t>(state.range(0));
    TrialRng rng(0, 0, fnv1a64("bench_pair"));
    const Point p = random_point(rng, dim);
    const Point q = random_point(rng, dim);
    const SkewWeight a(0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_skew_jensen(entry.spec, p, q, a));
    }
}

void bm_right_centroid(benchmark::State& state) {
    const auto entry = get_entry("hellinger");
    const auto n = static_cast<std::size_t>(state.range(0));
    TrialRng rng(0, 0, fnv1a64("bench_centroid"));
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, 16));
    const auto w = WeightVector::uniform(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(right_centroid(entry.spec, pts, w));
    }
}

void bm_kmeans(benchmark::State& state) {
    const auto entry = get_entry("kl");
    const auto n = static_cast<std::size_t>(state.range(0));
    TrialRng rng(0, 0, fnv1a64("bench_kmeans"));
    std::vector<Point> data;
    for (std::size_t i = 0; i < n; ++i) data.push_back(random_point(rng, 4));
    ClusterConfig cfg;
    cfg.k = 8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmeans(entry.spec, data, cfg));
    }
}

BENCHMARK_CAPTURE(bm_g_bregman, kl, "kl")->Arg(8)->Arg(64)->Arg(512)->Arg(4096);
BENCHMARK_CAPTURE(bm_g_bregman, hellinger, "hellinger")->Arg(8)->Arg(512);
BENCHMARK_CAPTURE(bm_g_bregman, pearson, "pearson_chi2")->Arg(8)->Arg(512);
BENCHMARK(bm_skew_jensen)->Arg(8)->Arg(512);
BENCHMARK(bm_right_centroid)->Arg(4)->Arg(64)->Arg(1024);
BENCHMARK(bm_kmeans)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
