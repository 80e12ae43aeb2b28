#ifndef MATCHRED_TRACE_HPP
#define MATCHRED_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "matchred/graph.hpp"

namespace matchred {

using EdgePair = std::pair<VertexId, VertexId>;

// --- unweighted events ------------------------------------------------

struct Deg0Delete {
    VertexId v;
};

// v had degree one; v and its neighbor u were removed and vu is matched.
struct Deg1Match {
    VertexId v, u;
};

// v had degree two with neighbors u, w; v was removed and u, w merged
// into z. provenance[x] records which of u (bit 1) / w (bit 2) supplied
// the edge z-x; uw_edge remembers a direct edge between u and w.
struct Deg2Merge {
    VertexId v, u, w, z;
    bool uw_edge = false;
    std::map<VertexId, unsigned> provenance;
};

struct CrownRemove {
    std::vector<VertexId> head;      // H, matched side
    std::vector<VertexId> indep;     // I, independent side
    std::vector<EdgePair> saturating;  // matches every H vertex into I
};

struct LpRemove {
    std::vector<VertexId> ones;   // removed with offset contribution
    std::vector<VertexId> zeros;  // removed for free
    std::vector<EdgePair> saturating;
};

struct RelaxedCrownReplace {
    std::vector<VertexId> head, indep;
    VertexId z;  // replacement vertex
    // For each h in head, a matching saturating head \ {h} into indep.
    std::map<VertexId, std::vector<EdgePair>> matchings;
};

// --- weighted events --------------------------------------------------

struct WZeroEdgeDelete {
    VertexId u, v;
};

struct WZeroVertexDelete {
    VertexId v;
};

struct WDeg1Begin {};

// One degree-one removal inside a counter sweep. decrement is the
// effective weight of uv at removal time, original_weight the stored
// weight of the edge when the sweep started.
struct WDeg1 {
    VertexId v, u;
    Weight decrement = 0;
    Weight original_weight = 0;
};

// Closes a counter sweep; the final rewrite sets every surviving edge
// to max{0, w - c(x) - c(y)}.
struct WDeg1End {
    std::vector<std::pair<VertexId, Weight>> counters;
};

struct PendCycle {
    VertexId anchor = 0;
    VertexId z = 0;
    Weight uz_weight = 0;
    std::vector<VertexId> rest;   // cycle is anchor, rest..., back to anchor
    std::vector<Weight> weights;  // weights[i] = w(cyc[i], cyc[i+1]), wrapping
    Weight value_cycle = 0, value_minus_anchor = 0;
    std::vector<EdgePair> mm_cycle, mm_minus_anchor;
};

struct MaxPath {
    VertexId u = 0, v = 0, z = 0;
    Weight uz_weight = 0, vz_weight = 0;
    bool uv_edge_before = false;
    Weight uv_weight_before = 0, uv_weight_after = 0;
    std::vector<VertexId> inner;
    std::vector<Weight> weights;  // |inner| + 1 edges along u, inner..., v
    Weight value_full = 0, value_no_u = 0, value_no_v = 0, value_no_uv = 0;
    std::vector<EdgePair> mm_full, mm_no_u, mm_no_v, mm_no_uv;
};

// A whole component that is a bare path or cycle, solved directly.
struct IsolatedComponent {
    bool cycle = false;
    std::vector<VertexId> order;
    std::vector<Weight> weights;  // |order|-1 edges, one more when cycle
    Weight value = 0;
    std::vector<EdgePair> best;
};

using TraceEvent =
    std::variant<Deg0Delete, Deg1Match, Deg2Merge, CrownRemove, LpRemove, RelaxedCrownReplace,
                 WZeroEdgeDelete, WZeroVertexDelete, WDeg1Begin, WDeg1, WDeg1End, PendCycle,
                 MaxPath, IsolatedComponent>;

/// Ordered reduction log. Replaying the events forward from the original
/// graph reproduces the kernel; the accumulated offsets tie the kernel
/// optimum back to the original optimum.
class ReductionTrace {
public:
    void push(TraceEvent e);
    void append(ReductionTrace other);

    const std::vector<TraceEvent>& events() const { return events_; }
    bool empty() const { return events_.empty(); }

    std::uint64_t cardinality_offset() const { return cardinality_offset_; }
    Weight weight_offset() const { return weight_offset_; }

    // Forward replay; mutates g into the kernel this trace produced.
    void replay(Graph& g) const;
    void replay(WeightedGraph& g) const;

    void serialize(std::ostream& out) const;
    static ReductionTrace deserialize(std::istream& in);

private:
    std::vector<TraceEvent> events_;
    std::uint64_t cardinality_offset_ = 0;
    Weight weight_offset_ = 0;
};

// Offset contributed by a single event (cardinality for unweighted
// events, weight for weighted ones).
std::uint64_t event_cardinality_offset(const TraceEvent& e);
Weight event_weight_offset(const TraceEvent& e);

}  // namespace matchred

#endif
