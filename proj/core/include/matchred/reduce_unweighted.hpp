#ifndef MATCHRED_REDUCE_UNWEIGHTED_HPP
#define MATCHRED_REDUCE_UNWEIGHTED_HPP

#include "matchred/graph.hpp"
#include "matchred/matching.hpp"
#include "matchred/trace.hpp"

namespace matchred {

struct UnweightedReduction {
    Graph kernel;
    ReductionTrace trace;
};

/// Exhaustively removes degree-0/1/2 vertices. Degree-0/1 eliminations
/// are drained before any degree-2 merge; worklists pop in ascending id.
/// The kernel has minimum degree 3 and
/// mm(input) = mm(kernel) + trace.cardinality_offset().
UnweightedReduction apply_degree_rules_exhaustive(Graph g);

// Mutating form used by pipelines; appends events to trace and returns
// whether anything changed.
bool reduce_degrees(Graph& g, ReductionTrace& trace);

/// Reverse-replays the trace, turning a matching of the kernel into a
/// matching of the original graph of size |kernel_matching| + offset.
/// Handles every unweighted event kind (degree, crown, LP, relaxed crown).
Matching lift_matching_unweighted(const Graph& original, const ReductionTrace& trace,
                                  const Matching& kernel_matching);

struct KernelBoundReport {
    std::size_t feedback_edge_number = 0;
    std::size_t kernel_vertices = 0;
    std::size_t kernel_edges = 0;
    std::size_t vertex_bound = 0;  // 2k
    std::size_t edge_bound = 0;    // 3k
    std::size_t vertex_slack = 0;
    std::size_t edge_slack = 0;
};

// Checks |V(kernel)| <= 2k and |E(kernel)| <= 3k for k = feedback edge
// number of the original graph. The bound is guaranteed for fully
// reduced kernels, so a violation throws internal_error.
KernelBoundReport check_fes_kernel_bound(const Graph& original, const Graph& kernel);

}  // namespace matchred

#endif
