#ifndef MATCHRED_IO_HPP
#define MATCHRED_IO_HPP

#include <iosfwd>

#include "matchred/graph.hpp"

namespace matchred {

struct ParseStats {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
    std::size_t comment_lines = 0;
};

// Edge-list format: one "u v" (or "u v w") per line, '#' comments,
// decimal non-negative ids. Duplicates keep the first-seen weight,
// self-loops are dropped; both are counted in stats.
Graph parse_edge_list(std::istream& in, ParseStats* stats = nullptr);
WeightedGraph parse_weighted_edge_list(std::istream& in, ParseStats* stats = nullptr);

void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const WeightedGraph& g, std::ostream& out);

// "p edge n m" header followed by "e u v [w]" lines.
void write_dimacs(const Graph& g, std::ostream& out);
void write_dimacs(const WeightedGraph& g, std::ostream& out);

}  // namespace matchred

#endif
