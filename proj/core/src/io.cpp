#include "matchred/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace matchred {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

long long parse_number(const std::string& tok, std::size_t lineno, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error(lineno, std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

VertexId parse_vertex(const std::string& tok, std::size_t lineno) {
    long long v = parse_number(tok, lineno, "vertex id");
    if (v < 0) throw parse_error(lineno, "negative vertex id '" + tok + "'");
    return v;
}

template <typename AddEdge>
void parse_lines(std::istream& in, std::size_t tokens_per_line, ParseStats* stats,
                 AddEdge&& add_edge) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') {
            if (stats) ++stats->comment_lines;
            continue;
        }
        auto toks = split_tokens(line);
        if (toks.empty()) continue;
        if (toks.size() != tokens_per_line)
            throw parse_error(lineno, "expected " + std::to_string(tokens_per_line) +
                                          " fields, got " + std::to_string(toks.size()));
        add_edge(toks, lineno);
    }
}

}  // namespace

Graph parse_edge_list(std::istream& in, ParseStats* stats) {
    Graph g;
    parse_lines(in, 2, stats, [&](const std::vector<std::string>& toks, std::size_t lineno) {
        VertexId u = parse_vertex(toks[0], lineno);
        VertexId v = parse_vertex(toks[1], lineno);
        if (u == v) {
            g.add_vertex(u);
            if (stats) ++stats->self_loops;
        } else if (!g.add_edge(u, v) && stats) {
            ++stats->duplicate_edges;
        }
    });
    return g;
}

WeightedGraph parse_weighted_edge_list(std::istream& in, ParseStats* stats) {
    WeightedGraph g;
    parse_lines(in, 3, stats, [&](const std::vector<std::string>& toks, std::size_t lineno) {
        VertexId u = parse_vertex(toks[0], lineno);
        VertexId v = parse_vertex(toks[1], lineno);
        long long w = parse_number(toks[2], lineno, "weight");
        if (w < 0) throw parse_error(lineno, "negative weight '" + toks[2] + "'");
        if (u == v) {
            g.add_vertex(u);
            if (stats) ++stats->self_loops;
        } else if (!g.add_edge(u, v, static_cast<Weight>(w)) && stats) {
            ++stats->duplicate_edges;
        }
    });
    return g;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "# n " << g.vertex_count() << " m " << g.edge_count() << "\n";
    for (const auto& [v, nbrs] : g.adjacency()) {
        bool isolated = true;
        for (VertexId u : nbrs) {
            isolated = false;
            if (v < u) out << v << " " << u << "\n";
        }
        if (isolated) out << "# isolated " << v << "\n";
    }
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    out << "# n " << g.vertex_count() << " m " << g.edge_count() << "\n";
    for (const auto& [e, w] : g.weights()) out << e.first << " " << e.second << " " << w << "\n";
    for (const auto& [v, nbrs] : g.graph().adjacency())
        if (nbrs.empty()) out << "# isolated " << v << "\n";
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [v, nbrs] : g.adjacency())
        for (VertexId u : nbrs)
            if (v < u) out << "e " << v << " " << u << "\n";
}

void write_dimacs(const WeightedGraph& g, std::ostream& out) {
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [e, w] : g.weights())
        out << "e " << e.first << " " << e.second << " " << w << "\n";
}

}  // namespace matchred
