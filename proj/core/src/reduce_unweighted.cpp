#include "matchred/reduce_unweighted.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace matchred {

bool reduce_degrees(Graph& g, ReductionTrace& trace) {
    bool changed = false;
    std::set<VertexId> low;   // candidates with degree <= 1
    std::set<VertexId> two;   // candidates with degree == 2
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (nbrs.size() <= 1)
            low.insert(v);
        else if (nbrs.size() == 2)
            two.insert(v);
    }

    auto enqueue = [&](VertexId v) {
        std::size_t d = g.degree(v);
        if (d <= 1)
            low.insert(v);
        else if (d == 2)
            two.insert(v);
    };

    while (!low.empty() || !two.empty()) {
        if (!low.empty()) {
            VertexId v = *low.begin();
            low.erase(low.begin());
            if (!g.has_vertex(v)) continue;
            std::size_t d = g.degree(v);
            if (d > 1) {
                if (d == 2) two.insert(v);
                continue;
            }
            if (d == 0) {
                trace.push(Deg0Delete{v});
                g.remove_vertex(v);
                changed = true;
                continue;
            }
            VertexId u = *g.neighbors(v).begin();
            std::vector<VertexId> affected(g.neighbors(u).begin(), g.neighbors(u).end());
            trace.push(Deg1Match{v, u});
            g.remove_vertex(v);
            g.remove_vertex(u);
            changed = true;
            for (VertexId x : affected)
                if (g.has_vertex(x)) enqueue(x);
            continue;
        }

        VertexId v = *two.begin();
        two.erase(two.begin());
        if (!g.has_vertex(v)) continue;
        std::size_t d = g.degree(v);
        if (d != 2) {
            if (d <= 1) low.insert(v);
            continue;
        }
        auto it = g.neighbors(v).begin();
        VertexId u = *it++;
        VertexId w = *it;
        g.remove_vertex(v);
        bool uw = g.has_edge(u, w);
        MergeResult merged = g.merge_vertices(u, w);
        Deg2Merge ev;
        ev.v = v;
        ev.u = u;
        ev.w = w;
        ev.z = merged.merged;
        ev.uw_edge = uw;
        ev.provenance = merged.provenance;
        trace.push(std::move(ev));
        changed = true;
        enqueue(merged.merged);
        for (VertexId x : g.neighbors(merged.merged)) enqueue(x);
    }
    return changed;
}

UnweightedReduction apply_degree_rules_exhaustive(Graph g) {
    UnweightedReduction out;
    reduce_degrees(g, out.trace);
    out.kernel = std::move(g);
    return out;
}

KernelBoundReport check_fes_kernel_bound(const Graph& original, const Graph& kernel) {
    KernelBoundReport r;
    r.feedback_edge_number = original.feedback_edge_number();
    r.kernel_vertices = kernel.vertex_count();
    r.kernel_edges = kernel.edge_count();
    r.vertex_bound = 2 * r.feedback_edge_number;
    r.edge_bound = 3 * r.feedback_edge_number;
    if (r.kernel_vertices > r.vertex_bound || r.kernel_edges > r.edge_bound)
        throw internal_error("degree-rule kernel exceeds the 2k/3k bound: " +
                             std::to_string(r.kernel_vertices) + " vertices, " +
                             std::to_string(r.kernel_edges) + " edges, k = " +
                             std::to_string(r.feedback_edge_number));
    r.vertex_slack = r.vertex_bound - r.kernel_vertices;
    r.edge_slack = r.edge_bound - r.kernel_edges;
    return r;
}

namespace {

// Graph restoration data for one reversed event.
struct Inverse {
    std::vector<VertexId> add_vertices;
    std::vector<EdgePair> add_edges;
    std::vector<VertexId> drop_vertices;  // fresh vertices the event introduced
};

Inverse capture_removal(const Graph& g, const std::vector<VertexId>& doomed) {
    Inverse inv;
    std::set<VertexId> dset(doomed.begin(), doomed.end());
    inv.add_vertices = doomed;
    for (VertexId v : doomed)
        for (VertexId x : g.neighbors(v))
            if (!dset.count(x) || v < x) inv.add_edges.push_back({v, x});
    return inv;
}

Inverse apply_forward(Graph& g, const TraceEvent& ev) {
    if (const auto* d0 = std::get_if<Deg0Delete>(&ev)) {
        Inverse inv = capture_removal(g, {d0->v});
        g.remove_vertex(d0->v);
        return inv;
    }
    if (const auto* d1 = std::get_if<Deg1Match>(&ev)) {
        Inverse inv = capture_removal(g, {d1->v, d1->u});
        g.remove_vertex(d1->v);
        g.remove_vertex(d1->u);
        return inv;
    }
    if (const auto* d2 = std::get_if<Deg2Merge>(&ev)) {
        Inverse inv = capture_removal(g, {d2->v, d2->u, d2->w});
        inv.drop_vertices.push_back(d2->z);
        g.remove_vertex(d2->v);
        g.remove_vertex(d2->u);
        g.remove_vertex(d2->w);
        g.add_vertex(d2->z);
        for (const auto& [x, mask] : d2->provenance) {
            (void)mask;
            g.add_edge(d2->z, x);
        }
        return inv;
    }
    if (const auto* cr = std::get_if<CrownRemove>(&ev)) {
        std::vector<VertexId> doomed = cr->head;
        doomed.insert(doomed.end(), cr->indep.begin(), cr->indep.end());
        Inverse inv = capture_removal(g, doomed);
        for (VertexId v : doomed) g.remove_vertex(v);
        return inv;
    }
    if (const auto* lp = std::get_if<LpRemove>(&ev)) {
        std::vector<VertexId> doomed = lp->ones;
        doomed.insert(doomed.end(), lp->zeros.begin(), lp->zeros.end());
        Inverse inv = capture_removal(g, doomed);
        for (VertexId v : doomed) g.remove_vertex(v);
        return inv;
    }
    if (const auto* rc = std::get_if<RelaxedCrownReplace>(&ev)) {
        std::vector<VertexId> doomed = rc->head;
        doomed.insert(doomed.end(), rc->indep.begin(), rc->indep.end());
        Inverse inv = capture_removal(g, doomed);
        inv.drop_vertices.push_back(rc->z);
        std::set<VertexId> dset(doomed.begin(), doomed.end());
        std::set<VertexId> border;
        for (VertexId h : rc->head)
            for (VertexId x : g.neighbors(h))
                if (!dset.count(x)) border.insert(x);
        for (VertexId v : doomed) g.remove_vertex(v);
        g.add_vertex(rc->z);
        for (VertexId x : border) g.add_edge(rc->z, x);
        return inv;
    }
    throw validation_error("weighted event in unweighted lift");
}

void restore(Graph& g, const Inverse& inv) {
    for (VertexId z : inv.drop_vertices) g.remove_vertex(z);
    for (VertexId v : inv.add_vertices) g.add_vertex(v);
    for (const auto& [a, b] : inv.add_edges) g.add_edge(a, b);
}

void lift_event(const Graph& g, const TraceEvent& ev, Matching& m) {
    if (std::get_if<Deg0Delete>(&ev)) return;
    if (const auto* d1 = std::get_if<Deg1Match>(&ev)) {
        m.add(d1->v, d1->u);
        return;
    }
    if (const auto* d2 = std::get_if<Deg2Merge>(&ev)) {
        auto x = m.mate(d2->z);
        if (!x) {
            m.add(d2->v, d2->u);
            return;
        }
        m.remove_edge(d2->z, *x);
        unsigned mask = d2->provenance.at(*x);
        if (mask & 1u) {
            m.add(d2->u, *x);
            m.add(d2->v, d2->w);
        } else {
            m.add(d2->w, *x);
            m.add(d2->v, d2->u);
        }
        return;
    }
    if (const auto* cr = std::get_if<CrownRemove>(&ev)) {
        for (const auto& [a, b] : cr->saturating) m.add(a, b);
        return;
    }
    if (const auto* lp = std::get_if<LpRemove>(&ev)) {
        for (const auto& [a, b] : lp->saturating) m.add(a, b);
        return;
    }
    if (const auto* rc = std::get_if<RelaxedCrownReplace>(&ev)) {
        auto x = m.mate(rc->z);
        VertexId chosen = 0;
        if (x) {
            m.remove_edge(rc->z, *x);
            bool found = false;
            for (VertexId h : rc->head) {  // ascending: smallest adjacent id wins
                if (g.has_edge(h, *x)) {
                    chosen = h;
                    found = true;
                    break;
                }
            }
            if (!found) throw internal_error("relaxed-crown lift: no head vertex adjacent");
            m.add(chosen, *x);
        } else {
            chosen = *std::min_element(rc->head.begin(), rc->head.end());
        }
        for (const auto& [a, b] : rc->matchings.at(chosen)) m.add(a, b);
        return;
    }
    throw validation_error("weighted event in unweighted lift");
}

}  // namespace

Matching lift_matching_unweighted(const Graph& original, const ReductionTrace& trace,
                                  const Matching& kernel_matching) {
    Graph g = original;
    std::vector<Inverse> inverses;
    inverses.reserve(trace.events().size());
    for (const auto& ev : trace.events()) inverses.push_back(apply_forward(g, ev));

    try {
        kernel_matching.validate_against(g);
    } catch (const validation_error& e) {
        throw validation_error(std::string("kernel matching invalid: ") + e.what());
    }

    Matching m = kernel_matching;
    for (std::size_t i = trace.events().size(); i-- > 0;) {
        restore(g, inverses[i]);
        lift_event(g, trace.events()[i], m);
    }
    m.validate_against(original);
    if (m.size() != kernel_matching.size() + trace.cardinality_offset())
        throw internal_error("lifted matching size " + std::to_string(m.size()) +
                             " != kernel size + offset");
    return m;
}

}  // namespace matchred
