#ifndef MATCHRED_GRAPH_HPP
#define MATCHRED_GRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "matchred/errors.hpp"

namespace matchred {

using VertexId = std::int64_t;
using Weight = std::uint64_t;

inline std::pair<VertexId, VertexId> edge_key(VertexId u, VertexId v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Adds a and b, throws on wrap-around. Offsets and DP sums go through this.
Weight checked_add(Weight a, Weight b);

/// Result of merging two vertices into a fresh one. For every edge
/// merged--x the provenance mask records which of the two merged
/// endpoints was adjacent to x (bit 1: first argument, bit 2: second).
struct MergeResult {
    VertexId merged;
    std::map<VertexId, unsigned> provenance;
};

/// Simple undirected graph over stable integer ids. Self-loops are
/// dropped and parallel edges deduplicated at every insertion point;
/// fresh ids are handed out above the largest id ever seen.
class Graph {
public:
    Graph() = default;

    bool add_vertex(VertexId v);
    // Returns true if the edge was inserted, false if it was a
    // duplicate or self-loop (both silently ignored). Missing
    // endpoints are created.
    bool add_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);
    bool remove_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    bool has_edge(VertexId u, VertexId v) const;
    std::size_t degree(VertexId v) const;
    const std::set<VertexId>& neighbors(VertexId v) const;

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return m_; }
    bool empty() const { return adj_.empty(); }

    const std::map<VertexId, std::set<VertexId>>& adjacency() const { return adj_; }
    std::vector<VertexId> vertex_ids() const;

    // Next unused id; add_vertex/add_edge keep the counter above every id seen.
    VertexId fresh_vertex_id() const { return next_fresh_; }
    VertexId make_fresh_vertex();

    /// Replaces u and w by a fresh vertex z with
    /// N(z) = (N(u) ∪ N(w)) \ {u, w}; an edge uw disappears.
    MergeResult merge_vertices(VertexId u, VertexId w);

    std::vector<std::vector<VertexId>> connected_components() const;

    // m - n + #components: minimum number of edges whose removal leaves a forest.
    std::size_t feedback_edge_number() const;

    // Symmetry/simplicity/count invariants; throws internal_error on violation.
    void check_consistent() const;

private:
    std::map<VertexId, std::set<VertexId>> adj_;
    std::size_t m_ = 0;
    VertexId next_fresh_ = 0;

    void note_id(VertexId v);
};

/// Graph plus non-negative integer edge weights. Orientation-independent
/// lookup; on duplicate insertion the first-seen weight wins.
class WeightedGraph {
public:
    WeightedGraph() = default;

    bool add_vertex(VertexId v) { return g_.add_vertex(v); }
    bool add_edge(VertexId u, VertexId v, Weight w);
    void set_weight(VertexId u, VertexId v, Weight w);
    Weight weight(VertexId u, VertexId v) const;

    void remove_vertex(VertexId v);
    bool remove_edge(VertexId u, VertexId v);

    const Graph& graph() const { return g_; }
    bool has_vertex(VertexId v) const { return g_.has_vertex(v); }
    bool has_edge(VertexId u, VertexId v) const { return g_.has_edge(u, v); }
    std::size_t degree(VertexId v) const { return g_.degree(v); }
    const std::set<VertexId>& neighbors(VertexId v) const { return g_.neighbors(v); }
    std::size_t vertex_count() const { return g_.vertex_count(); }
    std::size_t edge_count() const { return g_.edge_count(); }
    bool empty() const { return g_.empty(); }
    std::vector<VertexId> vertex_ids() const { return g_.vertex_ids(); }
    VertexId make_fresh_vertex() { return g_.make_fresh_vertex(); }

    const std::map<std::pair<VertexId, VertexId>, Weight>& weights() const { return w_; }

    void check_consistent() const;

private:
    Graph g_;
    std::map<std::pair<VertexId, VertexId>, Weight> w_;
};

/// Doubled instance for solvers that only find perfect matchings: two
/// copies of the input plus a weight-zero edge tying each vertex to its
/// copy. 2n vertices, 2m + n edges; always admits a perfect matching.
struct PerfectMatchingExport {
    WeightedGraph instance;
    std::map<VertexId, VertexId> copy_of;
};

PerfectMatchingExport export_perfect_matching_instance(const WeightedGraph& g);
// Unweighted overload: copy edges get weight 1.
PerfectMatchingExport export_perfect_matching_instance(const Graph& g);

}  // namespace matchred

#endif
