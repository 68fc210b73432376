#include <benchmark/benchmark.h>

#include "ramsey/canonical.hpp"
#include "ramsey/colouring.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/extraction.hpp"
#include "ramsey/graph.hpp"

using namespace ramsey;

namespace {

void BM_find_embedding_dense(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph host = EdgeColouring::random(n, 2, 7).colour_class(0);
    Graph pattern = Graph::complete_bipartite(2, 2);
    for (auto _ : state) {
        auto e = find_embedding(host, pattern);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_find_embedding_dense)->Arg(16)->Arg(32)->Arg(64);

void BM_arrows_triangle(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    Graph k3 = Graph::complete(3);
    for (auto _ : state) {
        auto rep = arrows(N, 2, k3);
        benchmark::DoNotOptimize(rep.outcome);
    }
}
BENCHMARK(BM_arrows_triangle)->Arg(5)->Arg(6)->Arg(7);

void BM_ramsey_diamond(benchmark::State& state) {
    Graph k4e = Graph::complete(4);
    k4e.remove_edge(0, 1);
    for (auto _ : state) {
        auto r = ramsey_number(k4e);
        benchmark::DoNotOptimize(r.lo);
    }
}
BENCHMARK(BM_ramsey_diamond);

void BM_canonical_form(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = EdgeColouring::random(n, 2, 11).colour_class(0);
    for (auto _ : state) {
        auto key = canonical_form(g);
        benchmark::DoNotOptimize(key);
    }
}
BENCHMARK(BM_canonical_form)->Arg(8)->Arg(10)->Arg(12);

void BM_long_mono_path(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    EdgeColouring c = EdgeColouring::random(N, 2, 3);
    for (auto _ : state) {
        auto p = find_long_mono_path(c);
        benchmark::DoNotOptimize(p.second.size());
    }
}
BENCHMARK(BM_long_mono_path)->Arg(20)->Arg(40)->Arg(64);

void BM_extract_case1(benchmark::State& state) {
    EdgeColouring c = EdgeColouring::random(30, 2, 5);
    for (auto _ : state) {
        auto out = extract_case1(c, 2, 8);
        benchmark::DoNotOptimize(out.index());
    }
}
BENCHMARK(BM_extract_case1);

void BM_random_colouring(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto c = EdgeColouring::random(64, 2, seed++);
        benchmark::DoNotOptimize(c.pair_count());
    }
}
BENCHMARK(BM_random_colouring);

}  // namespace

BENCHMARK_MAIN();
