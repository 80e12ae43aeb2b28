#ifndef MATCHRED_CROWN_HPP
#define MATCHRED_CROWN_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "matchred/graph.hpp"
#include "matchred/matching.hpp"
#include "matchred/reduce_unweighted.hpp"
#include "matchred/solvers.hpp"
#include "matchred/trace.hpp"

namespace matchred {

/// Bipartite double cover: left and right copies of the vertex set with
/// edges v_L u_R and v_R u_L for every original edge uv. Copies share the
/// dense index of their original vertex.
struct BipartiteDouble {
    std::vector<VertexId> originals;  // sorted; index i <-> copies (i_L, i_R)
    std::map<VertexId, int> index;
    BipartiteGraph bip;

    VertexId original(int i) const { return originals[static_cast<std::size_t>(i)]; }
};

BipartiteDouble build_bipartite_double(const Graph& g);

struct DoubleCover {
    std::vector<bool> left, right;  // per dense index
    std::size_t size = 0;
};

/// König cover of the double from a maximum matching: Z = copies
/// reachable from free left copies along alternating paths, cover =
/// (V_L \ Z) ∪ (V_R ∩ Z). |cover| = |matching|; throws validation_error
/// when the matching is not maximum.
DoubleCover konig_vertex_cover(const BipartiteDouble& d, const BipMatching& m);

/// Half-integral vertex-cover LP assignment: ones get 1, zeros get 0,
/// halves get 1/2.
struct LpSolution {
    std::set<VertexId> zeros, halves, ones;

    // 2 * (|ones| + |halves|/2), kept integral.
    std::size_t doubled_objective() const { return 2 * ones.size() + halves.size(); }
    void validate(const Graph& g) const;
};

LpSolution lp_solution_from_cover(const BipartiteDouble& d, const DoubleCover& cover);

/// Optimal solution with the fewest half-assigned vertices: starts from
/// the König cover solution, then promotes whole strongly connected
/// components of the matched half-region to {0, 1} where feasible. The
/// residual graph on the half vertices contains no crown.
LpSolution maximal_persistency(const BipartiteDouble& d, const BipMatching& m);
LpSolution maximal_persistency(const Graph& g);

struct Crown {
    std::set<VertexId> head;   // H = N(I)
    std::set<VertexId> indep;  // I
    std::vector<EdgePair> saturating;
};

struct RelaxedCrown {
    std::set<VertexId> head, indep;
    std::map<VertexId, std::vector<EdgePair>> matchings;  // per head vertex
};

/// Removes zeros ∪ ones of an optimal solution; offset grows by |ones|.
/// The pair (ones, zeros) is always a crown, witnessed by a saturating
/// matching computed here and stored in the trace.
UnweightedReduction apply_lp_rule(const Graph& g, const LpSolution& sol);
bool apply_lp_rule(Graph& g, const LpSolution& sol, ReductionTrace& trace);

/// Removes a validated crown; offset grows by |H|.
UnweightedReduction apply_crown(const Graph& g, const Crown& c);
void apply_crown(Graph& g, const Crown& c, ReductionTrace& trace);

/// Complete search over independent sets I (H = N(I), saturation via
/// Hopcroft-Karp). Returns the first crown in ascending subset order or
/// nothing if none exists. Guard: n <= 16.
std::optional<Crown> find_crown_bruteforce(const Graph& g);

/// Replaces a relaxed crown by one fresh vertex; offset grows by |H|-1.
/// Requires a crown-free host graph (verified with find_crown_bruteforce
/// unless assume_crown_free is set or the graph exceeds the guard).
UnweightedReduction apply_relaxed_crown(const Graph& g, const RelaxedCrown& rc,
                                        bool assume_crown_free = false);

/// Fixpoint of the degree rules and the LP/crown pass. The kernel has
/// minimum degree 3, contains no crown, and has at most twice the vertex
/// cover number of the input many vertices.
UnweightedReduction crown_kernelize(Graph g);

// Same engine as lift_matching_unweighted; crown, LP and relaxed-crown
// events splice their stored witness matchings back in.
Matching lift_matching_crown(const Graph& original, const ReductionTrace& trace,
                             const Matching& kernel_matching);

}  // namespace matchred

#endif
