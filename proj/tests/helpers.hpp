#ifndef MATCHRED_TESTS_HELPERS_HPP
#define MATCHRED_TESTS_HELPERS_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "matchred/graph.hpp"

namespace matchred::testing {

inline Graph from_edges(std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    Graph g;
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline WeightedGraph from_weighted_edges(
    std::initializer_list<std::tuple<VertexId, VertexId, Weight>> edges) {
    WeightedGraph g;
    for (auto [u, v, w] : edges) g.add_edge(u, v, w);
    return g;
}

inline Graph path_graph(std::size_t n) {
    Graph g;
    g.add_vertex(0);
    for (std::size_t v = 1; v < n; ++v)
        g.add_edge(static_cast<VertexId>(v - 1), static_cast<VertexId>(v));
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g;
    for (std::size_t v = 0; v < n; ++v)
        g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n));
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return g;
}

// Parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g;
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v)
            g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(a + v));
    return g;
}

// Center 0, leaves 1..n.
inline Graph star_graph(std::size_t leaves) {
    Graph g;
    g.add_vertex(0);
    for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, static_cast<VertexId>(v));
    return g;
}

inline Graph petersen_graph() {
    Graph g;
    for (VertexId v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);          // outer cycle
        g.add_edge(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        g.add_edge(v, 5 + v);                // spokes
    }
    return g;
}

}  // namespace matchred::testing

#endif
