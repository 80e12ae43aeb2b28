#include "matchred/graph.hpp"

#include <algorithm>
#include <limits>

namespace matchred {

Weight checked_add(Weight a, Weight b) {
    if (a > std::numeric_limits<Weight>::max() - b)
        throw internal_error("weight overflow");
    return a + b;
}

void Graph::note_id(VertexId v) {
    if (v >= next_fresh_) next_fresh_ = v + 1;
}

bool Graph::add_vertex(VertexId v) {
    note_id(v);
    return adj_.emplace(v, std::set<VertexId>{}).second;
}

bool Graph::add_edge(VertexId u, VertexId v) {
    if (u == v) {
        add_vertex(u);
        return false;
    }
    add_vertex(u);
    add_vertex(v);
    bool inserted = adj_[u].insert(v).second;
    adj_[v].insert(u);
    if (inserted) ++m_;
    return inserted;
}

void Graph::remove_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw identifier_error("remove_vertex: unknown vertex " + std::to_string(v));
    for (VertexId u : it->second) {
        adj_[u].erase(v);
        --m_;
    }
    adj_.erase(it);
}

bool Graph::remove_edge(VertexId u, VertexId v) {
    auto it = adj_.find(u);
    if (it == adj_.end() || !it->second.erase(v)) return false;
    adj_[v].erase(u);
    --m_;
    return true;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

std::size_t Graph::degree(VertexId v) const {
    return neighbors(v).size();
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw identifier_error("unknown vertex " + std::to_string(v));
    return it->second;
}

std::vector<VertexId> Graph::vertex_ids() const {
    std::vector<VertexId> ids;
    ids.reserve(adj_.size());
    for (const auto& [v, _] : adj_) ids.push_back(v);
    return ids;
}

VertexId Graph::make_fresh_vertex() {
    VertexId z = next_fresh_;
    add_vertex(z);
    return z;
}

MergeResult Graph::merge_vertices(VertexId u, VertexId w) {
    if (u == w) throw identifier_error("merge_vertices: identical endpoints");
    if (!has_vertex(u) || !has_vertex(w))
        throw identifier_error("merge_vertices: unknown vertex");

    MergeResult res;
    for (VertexId x : adj_[u])
        if (x != w) res.provenance[x] |= 1u;
    for (VertexId x : adj_[w])
        if (x != u) res.provenance[x] |= 2u;

    remove_vertex(u);
    remove_vertex(w);
    VertexId z = make_fresh_vertex();
    res.merged = z;
    for (const auto& [x, mask] : res.provenance) {
        (void)mask;
        add_edge(z, x);
    }
    return res;
}

std::vector<std::vector<VertexId>> Graph::connected_components() const {
    std::vector<std::vector<VertexId>> comps;
    std::set<VertexId> seen;
    for (const auto& [start, _] : adj_) {
        if (seen.count(start)) continue;
        std::vector<VertexId> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId u : adj_.at(v)) {
                if (seen.insert(u).second) stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::size_t Graph::feedback_edge_number() const {
    return m_ + connected_components().size() - adj_.size();
}

void Graph::check_consistent() const {
    std::size_t deg_sum = 0;
    for (const auto& [v, nbrs] : adj_) {
        if (nbrs.count(v)) throw internal_error("self-loop at " + std::to_string(v));
        for (VertexId u : nbrs) {
            auto it = adj_.find(u);
            if (it == adj_.end() || !it->second.count(v))
                throw internal_error("asymmetric edge " + std::to_string(v) + "-" + std::to_string(u));
        }
        deg_sum += nbrs.size();
    }
    if (deg_sum != 2 * m_) throw internal_error("edge count out of sync");
}

bool WeightedGraph::add_edge(VertexId u, VertexId v, Weight w) {
    if (!g_.add_edge(u, v)) return false;
    w_[edge_key(u, v)] = w;
    return true;
}

void WeightedGraph::set_weight(VertexId u, VertexId v, Weight w) {
    if (!g_.has_edge(u, v)) throw identifier_error("set_weight: no such edge");
    w_[edge_key(u, v)] = w;
}

Weight WeightedGraph::weight(VertexId u, VertexId v) const {
    auto it = w_.find(edge_key(u, v));
    if (it == w_.end()) throw identifier_error("weight: no such edge");
    return it->second;
}

void WeightedGraph::remove_vertex(VertexId v) {
    for (VertexId u : g_.neighbors(v)) w_.erase(edge_key(u, v));
    g_.remove_vertex(v);
}

bool WeightedGraph::remove_edge(VertexId u, VertexId v) {
    if (!g_.remove_edge(u, v)) return false;
    w_.erase(edge_key(u, v));
    return true;
}

void WeightedGraph::check_consistent() const {
    g_.check_consistent();
    if (w_.size() != g_.edge_count()) throw internal_error("weight map out of sync");
    for (const auto& [e, _] : w_)
        if (!g_.has_edge(e.first, e.second)) throw internal_error("weight for missing edge");
}

PerfectMatchingExport export_perfect_matching_instance(const WeightedGraph& g) {
    PerfectMatchingExport out;
    VertexId base = 0;
    for (VertexId v : g.vertex_ids())
        if (v >= base) base = v + 1;
    VertexId next = base;
    for (VertexId v : g.vertex_ids()) out.copy_of[v] = next++;

    for (VertexId v : g.vertex_ids()) {
        out.instance.add_vertex(v);
        out.instance.add_vertex(out.copy_of[v]);
    }
    for (const auto& [e, w] : g.weights()) {
        out.instance.add_edge(e.first, e.second, w);
        out.instance.add_edge(out.copy_of[e.first], out.copy_of[e.second], w);
    }
    for (const auto& [v, c] : out.copy_of) out.instance.add_edge(v, c, 0);
    return out;
}

PerfectMatchingExport export_perfect_matching_instance(const Graph& g) {
    WeightedGraph wg;
    for (VertexId v : g.vertex_ids()) wg.add_vertex(v);
    for (const auto& [v, nbrs] : g.adjacency())
        for (VertexId u : nbrs)
            if (v < u) wg.add_edge(v, u, 1);
    return export_perfect_matching_instance(wg);
}

}  // namespace matchred
