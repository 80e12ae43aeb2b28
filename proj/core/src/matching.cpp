#include "matchred/matching.hpp"

namespace matchred {

void Matching::add(VertexId u, VertexId v) {
    if (u == v) throw validation_error("matching edge is a self-loop");
    if (mate_.count(u) || mate_.count(v))
        throw validation_error("matching edge overlaps a matched vertex");
    edges_.insert(edge_key(u, v));
    mate_[u] = v;
    mate_[v] = u;
}

bool Matching::remove_edge(VertexId u, VertexId v) {
    if (!edges_.erase(edge_key(u, v))) return false;
    mate_.erase(u);
    mate_.erase(v);
    return true;
}

bool Matching::release(VertexId v) {
    auto it = mate_.find(v);
    if (it == mate_.end()) return false;
    return remove_edge(v, it->second);
}

std::optional<VertexId> Matching::mate(VertexId v) const {
    auto it = mate_.find(v);
    if (it == mate_.end()) return std::nullopt;
    return it->second;
}

Weight Matching::total_weight(const WeightedGraph& g) const {
    Weight total = 0;
    for (const auto& [u, v] : edges_) total = checked_add(total, g.weight(u, v));
    return total;
}

void Matching::validate_against(const Graph& g) const {
    for (const auto& [u, v] : edges_) {
        if (!g.has_edge(u, v))
            throw validation_error("matching edge " + std::to_string(u) + "-" +
                                   std::to_string(v) + " not in graph");
    }
    // Disjointness holds by construction; re-check the mate index anyway.
    for (const auto& [v, u] : mate_) {
        auto it = mate_.find(u);
        if (it == mate_.end() || it->second != v)
            throw internal_error("matching mate index out of sync");
    }
}

bool Matching::is_valid_for(const Graph& g) const {
    try {
        validate_against(g);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace matchred
