#ifndef MATCHRED_REDUCE_WEIGHTED_HPP
#define MATCHRED_REDUCE_WEIGHTED_HPP

#include <vector>

#include "matchred/graph.hpp"
#include "matchred/matching.hpp"
#include "matchred/trace.hpp"

namespace matchred {

/// Chain u, inner..., v whose inner vertices all have degree two in the
/// host graph while the endpoints do not. At least two inner vertices.
struct PathSpec {
    std::vector<VertexId> vertices;  // front() = u, back() = v
    std::vector<Weight> weights;     // weights[i] = w(vertices[i], vertices[i+1])
};

/// Cycle with at most one vertex of degree != 2 (the anchor, listed
/// first). Unanchored bare cycles are whole components and are solved
/// directly instead of being replaced.
struct CycleSpec {
    bool anchored = true;
    std::vector<VertexId> vertices;  // [0] = anchor when anchored
    std::vector<Weight> weights;     // weights[i] = w(vertices[i], vertices[i+1]), wrapping
};

/// Maximum-weight matchings of a path given its edge weight sequence:
/// the full path and the variants with the front vertex, the back
/// vertex, or both endpoints removed. Witnesses are edge indices; ties
/// prefer skipping the later edge.
struct PathMwm {
    Weight full = 0, no_front = 0, no_back = 0, no_ends = 0;
    std::vector<std::size_t> take_full, take_no_front, take_no_back, take_no_ends;
};
PathMwm mwm_on_path(const std::vector<Weight>& weights);

/// Cycle variant: the closing edge is either taken (freeing a path on
/// the interior) or dropped. no_anchor removes vertex 0 of the cycle.
struct CycleMwm {
    Weight full = 0, no_anchor = 0;
    std::vector<std::size_t> take_full, take_no_anchor;
};
CycleMwm mwm_on_cycle(const std::vector<Weight>& weights);

// Deletes weight-zero edges, then degree-zero vertices.
bool apply_zero_rules(WeightedGraph& g, ReductionTrace& trace);

/// Counter-based exhaustive degree-one elimination: one pass over a
/// worklist with per-vertex counters, then a single weight rewrite.
/// Linear in n + m; the naive rule-at-a-time variant is quadratic on
/// stars.
bool apply_deg1_weighted_exhaustive(WeightedGraph& g, ReductionTrace& trace);

// Removes and solves every component that is a bare path or bare cycle.
bool solve_isolated_paths_cycles(WeightedGraph& g, ReductionTrace& trace);

// Replaces a pending cycle by a single edge anchor-z.
void apply_pending_cycle(WeightedGraph& g, const CycleSpec& spec, ReductionTrace& trace);

// Replaces a maximal path by a triangle u, v, z carrying the four
// endpoint cases.
void apply_max_path(WeightedGraph& g, const PathSpec& spec, ReductionTrace& trace);

enum class PipelineMode { prescribed, exhaustive };
enum class RuleOrder { deg1_first, paths_first };

struct WeightedReduction {
    WeightedGraph kernel;
    ReductionTrace trace;
};

/// prescribed: zero rules, degree-one sweep, isolated components, then
/// one pre-enumerated pass of path/cycle replacements (paths before
/// cycles). Guarantees at most 7k vertices and 9k edges for feedback
/// edge number k >= 1 and an empty kernel for k = 0.
/// exhaustive: loops all rules to a joint fixpoint; smaller kernels, no
/// size guarantee. Both preserve mwm weight up to the trace offset.
WeightedReduction weighted_kernel_pipeline(WeightedGraph g, PipelineMode mode,
                                           RuleOrder order = RuleOrder::deg1_first);

/// Reverse-replays the trace, converting a kernel matching into a
/// matching of the original graph whose weight is exactly the kernel
/// matching's weight plus the trace weight offset.
Matching lift_matching_weighted(const WeightedGraph& original, const ReductionTrace& trace,
                                const Matching& kernel_matching);

struct WeightedBoundReport {
    std::size_t feedback_edge_number = 0;
    std::size_t kernel_vertices = 0;
    std::size_t kernel_edges = 0;
    std::size_t vertex_bound = 0;  // 7k
    std::size_t edge_bound = 0;    // 9k
    std::size_t vertex_slack = 0;
    std::size_t edge_slack = 0;
};

// |V| <= 7k and |E| <= 9k for prescribed-mode kernels; k = 0 demands an
// empty kernel. Violations throw internal_error.
WeightedBoundReport check_weighted_kernel_bound(const WeightedGraph& original,
                                                const WeightedGraph& kernel);

}  // namespace matchred

#endif
