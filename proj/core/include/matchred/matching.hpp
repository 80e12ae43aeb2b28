#ifndef MATCHRED_MATCHING_HPP
#define MATCHRED_MATCHING_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "matchred/graph.hpp"

namespace matchred {

/// Set of pairwise vertex-disjoint edges.
class Matching {
public:
    Matching() = default;

    // Throws validation_error on self-loops or overlap with a matched vertex.
    void add(VertexId u, VertexId v);
    bool remove_edge(VertexId u, VertexId v);
    // Drops the edge covering v, if any.
    bool release(VertexId v);

    bool covers(VertexId v) const { return mate_.count(v) != 0; }
    std::optional<VertexId> mate(VertexId v) const;

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::set<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    Weight total_weight(const WeightedGraph& g) const;

    // Every edge present in g and endpoints disjoint; throws validation_error.
    void validate_against(const Graph& g) const;
    bool is_valid_for(const Graph& g) const;

private:
    std::set<std::pair<VertexId, VertexId>> edges_;
    std::map<VertexId, VertexId> mate_;
};

}  // namespace matchred

#endif
