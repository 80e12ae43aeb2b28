#ifndef MATCHRED_SOLVERS_HPP
#define MATCHRED_SOLVERS_HPP

#include <cstddef>
#include <vector>

#include "matchred/graph.hpp"
#include "matchred/matching.hpp"

namespace matchred {

/// Bipartite graph over dense 0-based side-local indices.
struct BipartiteGraph {
    std::size_t left_size = 0;
    std::size_t right_size = 0;
    std::vector<std::vector<int>> adj;  // left index -> right indices, kept sorted

    int add_left() {
        adj.emplace_back();
        return static_cast<int>(left_size++);
    }
    int add_right() { return static_cast<int>(right_size++); }
    void add_edge(int l, int r);
};

struct BipMatching {
    std::vector<int> mate_left;   // right index or -1
    std::vector<int> mate_right;  // left index or -1
    std::size_t size = 0;
};

// Maximum-cardinality bipartite matching, BFS layering + DFS augmenting
// phases, O(sqrt(n) m). Neighbors are scanned in ascending index so the
// result is deterministic.
BipMatching hopcroft_karp(const BipartiteGraph& g);

/// Simple digraph on dense indices; parallel arcs deduplicated.
struct Digraph {
    explicit Digraph(std::size_t n) : out(n) {}
    std::vector<std::vector<int>> out;
    std::size_t size() const { return out.size(); }
    void add_arc(int from, int to);
};

// Strongly connected components in reverse topological order: if an arc
// leads from component A to component B, B appears before A. Two-pass
// iterative DFS.
std::vector<std::vector<int>> kosaraju_scc(const Digraph& d);

// Maximum-cardinality matching in a general graph via augmenting paths
// with blossom contraction.
Matching blossom_mcm(const Graph& g);

struct McmResult {
    std::size_t size = 0;
    Matching witness;
};
// Exact maximum by recursion over the lowest vertex with memoization on
// the remaining vertex set. Guard: n <= 20.
McmResult brute_force_mcm(const Graph& g);

struct MwmResult {
    Weight weight = 0;
    Matching witness;
};
// Same recursion maximizing weight. Guard: n <= 18.
MwmResult brute_force_mwm(const WeightedGraph& g);

// Minimum vertex cover size by branching. Guard: n <= 20.
std::size_t brute_force_vc(const Graph& g);

}  // namespace matchred

#endif
