#include <benchmark/benchmark.h>

#include <random>

#include "matchred/crown.hpp"
#include "matchred/reduce_unweighted.hpp"
#include "matchred/reduce_weighted.hpp"
#include "matchred/solvers.hpp"

using namespace matchred;

namespace {

// Sparse random graph with m ~ 1.5n: plenty of low-degree structure, the
// regime the reductions are built for.
Graph sparse_graph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(static_cast<VertexId>(v));
    std::size_t target = n + n / 2;
    while (g.edge_count() < target) {
        VertexId a = static_cast<VertexId>(rng() % n);
        VertexId b = static_cast<VertexId>(rng() % n);
        if (a != b) g.add_edge(a, b);
    }
    return g;
}

WeightedGraph sparse_weighted(std::size_t n, std::uint64_t seed) {
    Graph skeleton = sparse_graph(n, seed);
    std::mt19937_64 rng(seed + 1);
    WeightedGraph g;
    for (VertexId v : skeleton.vertex_ids()) g.add_vertex(v);
    for (const auto& [v, nbrs] : skeleton.adjacency())
        for (VertexId u : nbrs)
            if (v < u) g.add_edge(v, u, 1 + rng() % 1000);
    return g;
}

void BM_DegreeRules(benchmark::State& state) {
    Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        auto red = apply_degree_rules_exhaustive(g);
        benchmark::DoNotOptimize(red.kernel);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DegreeRules)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_CrownKernelize(benchmark::State& state) {
    Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        auto red = crown_kernelize(g);
        benchmark::DoNotOptimize(red.kernel);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CrownKernelize)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_WeightedPipeline(benchmark::State& state) {
    WeightedGraph g = sparse_weighted(static_cast<std::size_t>(state.range(0)), 13);
    for (auto _ : state) {
        auto red = weighted_kernel_pipeline(g, PipelineMode::exhaustive);
        benchmark::DoNotOptimize(red.kernel);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WeightedPipeline)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

// The star is the quadratic trap for naive degree-one elimination; the
// counter sweep stays linear.
void BM_Deg1Star(benchmark::State& state) {
    std::mt19937_64 rng(17);
    WeightedGraph star;
    for (std::int64_t i = 1; i <= state.range(0); ++i)
        star.add_edge(0, i, 1 + rng() % 1000);
    for (auto _ : state) {
        WeightedGraph g = star;
        ReductionTrace trace;
        apply_deg1_weighted_exhaustive(g, trace);
        benchmark::DoNotOptimize(trace);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Deg1Star)->Range(1 << 10, 1 << 17)->Unit(benchmark::kMillisecond);

void BM_HopcroftKarpDouble(benchmark::State& state) {
    Graph g = sparse_graph(static_cast<std::size_t>(state.range(0)), 19);
    BipartiteDouble d = build_bipartite_double(g);
    for (auto _ : state) {
        BipMatching m = hopcroft_karp(d.bip);
        benchmark::DoNotOptimize(m);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HopcroftKarpDouble)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
