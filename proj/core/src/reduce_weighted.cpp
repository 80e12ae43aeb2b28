#include "matchred/reduce_weighted.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <string>
#include <tuple>

namespace matchred {

namespace {

// dp over edges[from, to): dp[i] = best using the first i edges of the
// slice, dp[i] = max(dp[i-1], dp[i-2] + w). Ties skip the current edge,
// so the lexicographically earliest witness wins.
std::pair<Weight, std::vector<std::size_t>> path_slice_dp(const std::vector<Weight>& w,
                                                          std::size_t from, std::size_t to) {
    if (to <= from) return {0, {}};
    std::size_t k = to - from;
    std::vector<Weight> dp(k + 1, 0);
    std::vector<char> take(k + 1, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        Weight skip = dp[i - 1];
        Weight with = checked_add(i >= 2 ? dp[i - 2] : 0, w[from + i - 1]);
        if (with > skip) {
            dp[i] = with;
            take[i] = 1;
        } else {
            dp[i] = skip;
        }
    }
    std::vector<std::size_t> witness;
    for (std::size_t i = k; i > 0;) {
        if (take[i]) {
            witness.push_back(from + i - 1);
            i = i >= 2 ? i - 2 : 0;
        } else {
            --i;
        }
    }
    std::reverse(witness.begin(), witness.end());
    return {dp[k], std::move(witness)};
}

}  // namespace

PathMwm mwm_on_path(const std::vector<Weight>& weights) {
    PathMwm r;
    std::size_t k = weights.size();
    std::tie(r.full, r.take_full) = path_slice_dp(weights, 0, k);
    std::tie(r.no_front, r.take_no_front) = path_slice_dp(weights, std::min<std::size_t>(1, k), k);
    std::tie(r.no_back, r.take_no_back) = path_slice_dp(weights, 0, k > 0 ? k - 1 : 0);
    std::tie(r.no_ends, r.take_no_ends) =
        path_slice_dp(weights, std::min<std::size_t>(1, k), k > 0 ? k - 1 : 0);
    return r;
}

CycleMwm mwm_on_cycle(const std::vector<Weight>& weights) {
    std::size_t len = weights.size();
    if (len < 3) throw validation_error("mwm_on_cycle: a cycle needs at least 3 edges");
    CycleMwm r;
    // Closing edge (index len-1) taken: its endpoints leave, interior path remains.
    auto [with_value, with_take] = path_slice_dp(weights, 1, len - 2);
    Weight with_total = checked_add(with_value, weights[len - 1]);
    auto [without_value, without_take] = path_slice_dp(weights, 0, len - 1);
    if (with_total > without_value) {
        r.full = with_total;
        r.take_full = with_take;
        r.take_full.push_back(len - 1);
    } else {
        r.full = without_value;
        r.take_full = without_take;
    }
    std::tie(r.no_anchor, r.take_no_anchor) = path_slice_dp(weights, 1, len - 1);
    return r;
}

bool apply_zero_rules(WeightedGraph& g, ReductionTrace& trace) {
    bool changed = false;
    std::vector<EdgePair> dead_edges;
    for (const auto& [e, w] : g.weights())
        if (w == 0) dead_edges.push_back(e);
    for (const auto& [u, v] : dead_edges) {
        trace.push(WZeroEdgeDelete{u, v});
        g.remove_edge(u, v);
        changed = true;
    }
    std::vector<VertexId> dead_vertices;
    for (VertexId v : g.vertex_ids())
        if (g.degree(v) == 0) dead_vertices.push_back(v);
    for (VertexId v : dead_vertices) {
        trace.push(WZeroVertexDelete{v});
        g.remove_vertex(v);
        changed = true;
    }
    return changed;
}

bool apply_deg1_weighted_exhaustive(WeightedGraph& g, ReductionTrace& trace) {
    std::deque<VertexId> worklist;
    for (VertexId v : g.vertex_ids())
        if (g.degree(v) == 1) worklist.push_back(v);
    if (worklist.empty()) return false;

    trace.push(WDeg1Begin{});
    std::map<VertexId, Weight> counter;
    auto counter_of = [&](VertexId v) {
        auto it = counter.find(v);
        return it == counter.end() ? Weight{0} : it->second;
    };

    while (!worklist.empty()) {
        VertexId v = worklist.front();
        worklist.pop_front();
        if (!g.has_vertex(v) || g.degree(v) != 1) continue;
        VertexId u = *g.neighbors(v).begin();
        Weight stored = g.weight(u, v);
        Weight sub = checked_add(counter_of(u), counter_of(v));
        Weight effective = stored > sub ? stored - sub : 0;
        // loop invariant: the current weight of any edge xy is
        // max{0, stored(xy) - c(x) - c(y)}, so a step never pays more than
        // the stored weight
        assert(effective <= stored);
        trace.push(WDeg1{v, u, effective, stored});
        counter[u] = checked_add(counter_of(u), effective);
        g.remove_vertex(v);
        if (g.has_vertex(u) && g.degree(u) == 1) worklist.push_back(u);
    }
#ifndef NDEBUG
    for (VertexId v : g.vertex_ids()) assert(g.degree(v) != 1);
#endif

    // One rewrite pass removes the counters from the representation.
    WDeg1End end;
    for (const auto& [v, c] : counter)
        if (c > 0 && g.has_vertex(v)) end.counters.emplace_back(v, c);
    std::vector<std::tuple<VertexId, VertexId, Weight>> updates;
    for (const auto& [e, w] : g.weights()) {
        Weight sub = checked_add(counter_of(e.first), counter_of(e.second));
        if (sub > 0) updates.emplace_back(e.first, e.second, w > sub ? w - sub : 0);
    }
    for (const auto& [a, b, w] : updates) g.set_weight(a, b, w);
    trace.push(std::move(end));
    return true;
}

namespace {

std::vector<EdgePair> indices_to_pairs(const std::vector<VertexId>& order, bool cycle,
                                       const std::vector<std::size_t>& take) {
    std::vector<EdgePair> out;
    out.reserve(take.size());
    for (std::size_t i : take) {
        VertexId a = order[i];
        VertexId b = cycle ? order[(i + 1) % order.size()] : order[i + 1];
        out.push_back(edge_key(a, b));
    }
    return out;
}

}  // namespace

bool solve_isolated_paths_cycles(WeightedGraph& g, ReductionTrace& trace) {
    bool changed = false;
    for (const auto& comp : g.graph().connected_components()) {
        bool flat = true;
        std::size_t deg1 = 0;
        for (VertexId v : comp) {
            std::size_t d = g.degree(v);
            if (d > 2) {
                flat = false;
                break;
            }
            if (d == 1) ++deg1;
        }
        if (!flat) continue;

        IsolatedComponent ev;
        if (comp.size() == 1) {
            ev.order = comp;
        } else if (deg1 == 0) {
            // bare cycle; walk from the smallest id toward its smaller neighbor
            ev.cycle = true;
            VertexId start = comp.front();
            VertexId prev = start, cur = *g.neighbors(start).begin();
            ev.order.push_back(start);
            while (cur != start) {
                ev.order.push_back(cur);
                const auto& nn = g.neighbors(cur);
                VertexId nxt = (*nn.begin() == prev) ? *std::next(nn.begin()) : *nn.begin();
                prev = cur;
                cur = nxt;
            }
            for (std::size_t i = 0; i < ev.order.size(); ++i)
                ev.weights.push_back(g.weight(ev.order[i], ev.order[(i + 1) % ev.order.size()]));
            CycleMwm best = mwm_on_cycle(ev.weights);
            ev.value = best.full;
            ev.best = indices_to_pairs(ev.order, true, best.take_full);
        } else {
            // bare path; walk from the smaller endpoint
            std::vector<VertexId> ends;
            for (VertexId v : comp)
                if (g.degree(v) == 1) ends.push_back(v);
            if (ends.size() != 2)
                throw internal_error("flat component with " + std::to_string(ends.size()) +
                                     " endpoints");
            VertexId cur = std::min(ends[0], ends[1]);
            VertexId prev = cur;
            while (cur != std::max(ends[0], ends[1])) {
                ev.order.push_back(cur);
                const auto& nn = g.neighbors(cur);
                VertexId nxt = (*nn.begin() == prev) ? *std::next(nn.begin()) : *nn.begin();
                prev = cur;
                cur = nxt;
            }
            ev.order.push_back(cur);
            for (std::size_t i = 0; i + 1 < ev.order.size(); ++i)
                ev.weights.push_back(g.weight(ev.order[i], ev.order[i + 1]));
            PathMwm best = mwm_on_path(ev.weights);
            ev.value = best.full;
            ev.best = indices_to_pairs(ev.order, false, best.take_full);
        }
        for (VertexId v : ev.order) g.remove_vertex(v);
        trace.push(std::move(ev));
        changed = true;
    }
    return changed;
}

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw validation_error(msg);
}

void validate_chain(const WeightedGraph& g, const std::vector<VertexId>& vs,
                    const std::vector<Weight>& ws, bool closing_edge) {
    require(ws.size() == (closing_edge ? vs.size() : vs.size() - 1),
            "structure: weight count does not fit the vertex sequence");
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        require(g.has_edge(vs[i], vs[i + 1]), "structure: missing chain edge");
        require(g.weight(vs[i], vs[i + 1]) == ws[i], "structure: stale edge weight");
    }
    if (closing_edge) {
        require(g.has_edge(vs.back(), vs.front()), "structure: missing closing edge");
        require(g.weight(vs.back(), vs.front()) == ws.back(), "structure: stale closing weight");
    }
}

}  // namespace

void apply_pending_cycle(WeightedGraph& g, const CycleSpec& spec, ReductionTrace& trace) {
    require(spec.anchored, "pending cycle: bare cycles are whole components, solve them instead");
    require(spec.vertices.size() >= 3, "pending cycle: too short");
    VertexId anchor = spec.vertices.front();
    require(g.has_vertex(anchor) && g.degree(anchor) >= 3, "pending cycle: anchor degree < 3");
    for (std::size_t i = 1; i < spec.vertices.size(); ++i)
        require(g.has_vertex(spec.vertices[i]) && g.degree(spec.vertices[i]) == 2,
                "pending cycle: interior vertex degree != 2");
    validate_chain(g, spec.vertices, spec.weights, true);

    CycleMwm best = mwm_on_cycle(spec.weights);
    PendCycle ev;
    ev.anchor = anchor;
    ev.rest.assign(spec.vertices.begin() + 1, spec.vertices.end());
    ev.weights = spec.weights;
    ev.value_cycle = best.full;
    ev.value_minus_anchor = best.no_anchor;
    ev.uz_weight = best.full - best.no_anchor;
    ev.mm_cycle = indices_to_pairs(spec.vertices, true, best.take_full);
    ev.mm_minus_anchor = indices_to_pairs(spec.vertices, true, best.take_no_anchor);

    for (VertexId v : ev.rest) g.remove_vertex(v);
    ev.z = g.make_fresh_vertex();
    g.add_edge(anchor, ev.z, ev.uz_weight);
    trace.push(std::move(ev));
}

void apply_max_path(WeightedGraph& g, const PathSpec& spec, ReductionTrace& trace) {
    require(spec.vertices.size() >= 4, "maximal path: needs at least two inner vertices");
    VertexId u = spec.vertices.front();
    VertexId v = spec.vertices.back();
    require(u != v, "maximal path: equal endpoints form a pending cycle");
    require(g.has_vertex(u) && g.degree(u) != 2, "maximal path: endpoint has degree 2");
    require(g.has_vertex(v) && g.degree(v) != 2, "maximal path: endpoint has degree 2");
    for (std::size_t i = 1; i + 1 < spec.vertices.size(); ++i)
        require(g.has_vertex(spec.vertices[i]) && g.degree(spec.vertices[i]) == 2,
                "maximal path: inner vertex degree != 2");
    validate_chain(g, spec.vertices, spec.weights, false);

    PathMwm best = mwm_on_path(spec.weights);
    MaxPath ev;
    ev.u = u;
    ev.v = v;
    ev.inner.assign(spec.vertices.begin() + 1, spec.vertices.end() - 1);
    ev.weights = spec.weights;
    ev.value_full = best.full;
    ev.value_no_u = best.no_front;
    ev.value_no_v = best.no_back;
    ev.value_no_uv = best.no_ends;
    ev.uz_weight = best.no_back - best.no_ends;
    ev.vz_weight = best.no_front - best.no_ends;
    ev.uv_edge_before = g.has_edge(u, v);
    ev.uv_weight_before = ev.uv_edge_before ? g.weight(u, v) : 0;
    ev.uv_weight_after = std::max(ev.uv_weight_before, best.full - best.no_ends);
    ev.mm_full = indices_to_pairs(spec.vertices, false, best.take_full);
    ev.mm_no_u = indices_to_pairs(spec.vertices, false, best.take_no_front);
    ev.mm_no_v = indices_to_pairs(spec.vertices, false, best.take_no_back);
    ev.mm_no_uv = indices_to_pairs(spec.vertices, false, best.take_no_ends);

    for (VertexId x : ev.inner) g.remove_vertex(x);
    ev.z = g.make_fresh_vertex();
    g.add_edge(u, ev.z, ev.uz_weight);
    g.add_edge(v, ev.z, ev.vz_weight);
    if (ev.uv_edge_before)
        g.set_weight(u, v, ev.uv_weight_after);
    else
        g.add_edge(u, v, ev.uv_weight_after);
    trace.push(std::move(ev));
}

namespace {

struct Structures {
    std::vector<PathSpec> paths;
    std::vector<CycleSpec> cycles;
};

// Every run of degree-two vertices, walked out to its non-degree-two
// endpoints. Bare cycles (no such endpoint) are skipped; they are whole
// components handled by solve_isolated_paths_cycles.
Structures enumerate_structures(const WeightedGraph& g) {
    Structures out;
    std::set<VertexId> consumed;
    for (VertexId seed : g.vertex_ids()) {
        if (g.degree(seed) != 2 || consumed.count(seed)) continue;
        std::deque<VertexId> run{seed};
        auto it = g.neighbors(seed).begin();
        VertexId a = *it++;
        VertexId b = *it;

        bool closed = false;
        VertexId prev = seed, cur = a;
        while (g.degree(cur) == 2 && cur != seed) {
            run.push_front(cur);
            const auto& nn = g.neighbors(cur);
            VertexId nxt = (*nn.begin() == prev) ? *std::next(nn.begin()) : *nn.begin();
            prev = cur;
            cur = nxt;
        }
        if (cur == seed) closed = true;
        VertexId front_end = cur;

        VertexId back_end = seed;
        if (!closed) {
            prev = seed;
            cur = b;
            while (g.degree(cur) == 2) {
                run.push_back(cur);
                const auto& nn = g.neighbors(cur);
                VertexId nxt = (*nn.begin() == prev) ? *std::next(nn.begin()) : *nn.begin();
                prev = cur;
                cur = nxt;
            }
            back_end = cur;
        }
        consumed.insert(run.begin(), run.end());
        if (closed) continue;

        if (front_end == back_end) {
            CycleSpec c;
            c.vertices.push_back(front_end);
            c.vertices.insert(c.vertices.end(), run.begin(), run.end());
            for (std::size_t i = 0; i < c.vertices.size(); ++i)
                c.weights.push_back(
                    g.weight(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]));
            out.cycles.push_back(std::move(c));
        } else if (run.size() >= 2) {
            // Single-inner chains stay: replacing them would not shrink the graph.
            PathSpec p;
            if (front_end > back_end) {
                std::reverse(run.begin(), run.end());
                std::swap(front_end, back_end);
            }
            p.vertices.push_back(front_end);
            p.vertices.insert(p.vertices.end(), run.begin(), run.end());
            p.vertices.push_back(back_end);
            for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
                p.weights.push_back(g.weight(p.vertices[i], p.vertices[i + 1]));
            out.paths.push_back(std::move(p));
        }
    }
    return out;
}

bool paths_cycles_pass(WeightedGraph& g, ReductionTrace& trace) {
    Structures s = enumerate_structures(g);
    for (const auto& p : s.paths) apply_max_path(g, p, trace);
    for (const auto& c : s.cycles) apply_pending_cycle(g, c, trace);
    return !s.paths.empty() || !s.cycles.empty();
}

}  // namespace

WeightedReduction weighted_kernel_pipeline(WeightedGraph g, PipelineMode mode, RuleOrder order) {
    ReductionTrace trace;
    if (mode == PipelineMode::prescribed) {
        apply_zero_rules(g, trace);
        apply_deg1_weighted_exhaustive(g, trace);
        solve_isolated_paths_cycles(g, trace);
        paths_cycles_pass(g, trace);
    } else {
        bool changed = true;
        while (changed) {
            changed = false;
            if (order == RuleOrder::deg1_first) {
                changed |= apply_zero_rules(g, trace);
                changed |= apply_deg1_weighted_exhaustive(g, trace);
                changed |= apply_zero_rules(g, trace);
                changed |= solve_isolated_paths_cycles(g, trace);
                changed |= paths_cycles_pass(g, trace);
            } else {
                changed |= solve_isolated_paths_cycles(g, trace);
                changed |= paths_cycles_pass(g, trace);
                changed |= apply_zero_rules(g, trace);
                changed |= apply_deg1_weighted_exhaustive(g, trace);
                changed |= apply_zero_rules(g, trace);
            }
        }
    }
    return {std::move(g), std::move(trace)};
}

WeightedBoundReport check_weighted_kernel_bound(const WeightedGraph& original,
                                                const WeightedGraph& kernel) {
    WeightedBoundReport r;
    r.feedback_edge_number = original.graph().feedback_edge_number();
    r.kernel_vertices = kernel.vertex_count();
    r.kernel_edges = kernel.edge_count();
    r.vertex_bound = 7 * r.feedback_edge_number;
    r.edge_bound = 9 * r.feedback_edge_number;
    if (r.kernel_vertices > r.vertex_bound || r.kernel_edges > r.edge_bound)
        throw internal_error("weighted kernel exceeds the 7k/9k bound: " +
                             std::to_string(r.kernel_vertices) + " vertices, " +
                             std::to_string(r.kernel_edges) + " edges, k = " +
                             std::to_string(r.feedback_edge_number));
    r.vertex_slack = r.vertex_bound - r.kernel_vertices;
    r.edge_slack = r.edge_bound - r.kernel_edges;
    return r;
}

namespace {

struct WInverse {
    std::vector<VertexId> add_vertices;
    std::vector<std::tuple<VertexId, VertexId, Weight>> add_edges;
    std::vector<VertexId> drop_vertices;
    std::vector<EdgePair> drop_edges;
    std::vector<std::tuple<VertexId, VertexId, Weight>> set_weights;
};

WInverse capture_removal(const WeightedGraph& g, const std::vector<VertexId>& doomed) {
    WInverse inv;
    std::set<VertexId> dset(doomed.begin(), doomed.end());
    inv.add_vertices = doomed;
    for (VertexId v : doomed)
        for (VertexId x : g.neighbors(v))
            if (!dset.count(x) || v < x) inv.add_edges.emplace_back(v, x, g.weight(v, x));
    return inv;
}

WInverse apply_forward(WeightedGraph& g, const TraceEvent& ev) {
    WInverse inv;
    if (const auto* we = std::get_if<WZeroEdgeDelete>(&ev)) {
        inv.add_edges.emplace_back(we->u, we->v, g.weight(we->u, we->v));
        g.remove_edge(we->u, we->v);
    } else if (const auto* wv = std::get_if<WZeroVertexDelete>(&ev)) {
        inv = capture_removal(g, {wv->v});
        g.remove_vertex(wv->v);
    } else if (std::get_if<WDeg1Begin>(&ev)) {
        // marker
    } else if (const auto* w1 = std::get_if<WDeg1>(&ev)) {
        inv = capture_removal(g, {w1->v});
        g.remove_vertex(w1->v);
    } else if (const auto* we1 = std::get_if<WDeg1End>(&ev)) {
        std::map<VertexId, Weight> c(we1->counters.begin(), we1->counters.end());
        std::vector<std::tuple<VertexId, VertexId, Weight>> updates;
        for (const auto& [e, w] : g.weights()) {
            Weight sub = 0;
            if (auto it = c.find(e.first); it != c.end()) sub = checked_add(sub, it->second);
            if (auto it = c.find(e.second); it != c.end()) sub = checked_add(sub, it->second);
            if (sub > 0) {
                inv.set_weights.emplace_back(e.first, e.second, w);
                updates.emplace_back(e.first, e.second, w > sub ? w - sub : 0);
            }
        }
        for (const auto& [a, b, w] : updates) g.set_weight(a, b, w);
    } else if (const auto* pc = std::get_if<PendCycle>(&ev)) {
        inv = capture_removal(g, pc->rest);
        inv.drop_vertices.push_back(pc->z);
        for (VertexId v : pc->rest) g.remove_vertex(v);
        g.add_vertex(pc->z);
        g.add_edge(pc->anchor, pc->z, pc->uz_weight);
    } else if (const auto* mp = std::get_if<MaxPath>(&ev)) {
        inv = capture_removal(g, mp->inner);
        inv.drop_vertices.push_back(mp->z);
        if (mp->uv_edge_before)
            inv.set_weights.emplace_back(mp->u, mp->v, mp->uv_weight_before);
        else
            inv.drop_edges.push_back(edge_key(mp->u, mp->v));
        for (VertexId v : mp->inner) g.remove_vertex(v);
        g.add_vertex(mp->z);
        g.add_edge(mp->u, mp->z, mp->uz_weight);
        g.add_edge(mp->v, mp->z, mp->vz_weight);
        if (mp->uv_edge_before)
            g.set_weight(mp->u, mp->v, mp->uv_weight_after);
        else
            g.add_edge(mp->u, mp->v, mp->uv_weight_after);
    } else if (const auto* iso = std::get_if<IsolatedComponent>(&ev)) {
        inv = capture_removal(g, iso->order);
        for (VertexId v : iso->order) g.remove_vertex(v);
    } else {
        throw validation_error("unweighted event in weighted lift");
    }
    return inv;
}

void restore(WeightedGraph& g, const WInverse& inv) {
    for (VertexId z : inv.drop_vertices) g.remove_vertex(z);
    for (const auto& [a, b] : inv.drop_edges) g.remove_edge(a, b);
    for (VertexId v : inv.add_vertices) g.add_vertex(v);
    for (const auto& [a, b, w] : inv.add_edges) g.add_edge(a, b, w);
    for (const auto& [a, b, w] : inv.set_weights) g.set_weight(a, b, w);
}

// Sum of decrements per vertex over the block ending just before `end`.
std::map<VertexId, Weight> block_counter_sums(const std::vector<TraceEvent>& events,
                                              std::size_t end) {
    std::map<VertexId, Weight> c;
    for (std::size_t j = end; j-- > 0;) {
        if (std::get_if<WDeg1Begin>(&events[j])) return c;
        const auto* w1 = std::get_if<WDeg1>(&events[j]);
        if (!w1) throw internal_error("foreign event inside a degree-one sweep");
        c[w1->u] = checked_add(c.count(w1->u) ? c[w1->u] : 0, w1->decrement);
    }
    throw internal_error("degree-one sweep without begin marker");
}

}  // namespace

Matching lift_matching_weighted(const WeightedGraph& original, const ReductionTrace& trace,
                                const Matching& kernel_matching) {
    WeightedGraph g = original;
    std::vector<WInverse> inverses;
    inverses.reserve(trace.events().size());
    for (const auto& ev : trace.events()) inverses.push_back(apply_forward(g, ev));

    try {
        kernel_matching.validate_against(g.graph());
    } catch (const validation_error& e) {
        throw validation_error(std::string("kernel matching invalid: ") + e.what());
    }
    Weight kernel_weight = kernel_matching.total_weight(g);

    Matching m = kernel_matching;
    std::map<VertexId, Weight> counters;  // live only inside a sweep block
    const auto& events = trace.events();
    for (std::size_t i = events.size(); i-- > 0;) {
        restore(g, inverses[i]);
        const TraceEvent& ev = events[i];
        if (std::get_if<WZeroEdgeDelete>(&ev) || std::get_if<WZeroVertexDelete>(&ev)) {
            // graph restoration is all there is to it
        } else if (std::get_if<WDeg1End>(&ev)) {
            counters = block_counter_sums(events, i);
        } else if (const auto* w1 = std::get_if<WDeg1>(&ev)) {
            // Decide against the effective weight of u's matching edge just
            // after this deletion; counters still include this decrement.
            auto mate = m.mate(w1->u);
            if (!mate) {
                m.add(w1->u, w1->v);
            } else {
                Weight w = g.weight(w1->u, *mate);
                Weight sub = checked_add(counters.count(w1->u) ? counters[w1->u] : 0,
                                         counters.count(*mate) ? counters[*mate] : 0);
                if (w <= sub) {  // effective weight zero: trade it for uv
                    m.remove_edge(w1->u, *mate);
                    m.add(w1->u, w1->v);
                }
            }
            counters[w1->u] -= w1->decrement;
        } else if (std::get_if<WDeg1Begin>(&ev)) {
            for (const auto& [v, c] : counters)
                if (c != 0) throw internal_error("sweep counters nonzero at block start");
            counters.clear();
        } else if (const auto* pc = std::get_if<PendCycle>(&ev)) {
            auto zmate = m.mate(pc->z);
            if (zmate) {
                if (*zmate != pc->anchor)
                    throw validation_error("pending-cycle stub matched off its anchor");
                m.remove_edge(pc->anchor, pc->z);
                for (const auto& [a, b] : pc->mm_cycle) m.add(a, b);
            } else {
                for (const auto& [a, b] : pc->mm_minus_anchor) m.add(a, b);
            }
        } else if (const auto* mp = std::get_if<MaxPath>(&ev)) {
            auto zmate = m.mate(mp->z);
            if (zmate && *zmate == mp->u) {
                m.remove_edge(mp->u, mp->z);
                for (const auto& [a, b] : mp->mm_no_v) m.add(a, b);
            } else if (zmate && *zmate == mp->v) {
                m.remove_edge(mp->v, mp->z);
                for (const auto& [a, b] : mp->mm_no_u) m.add(a, b);
            } else if (m.mate(mp->u) && *m.mate(mp->u) == mp->v) {
                bool keep_uv = mp->uv_edge_before &&
                               mp->uv_weight_before > mp->value_full - mp->value_no_uv;
                if (!keep_uv) {
                    m.remove_edge(mp->u, mp->v);
                    for (const auto& [a, b] : mp->mm_full) m.add(a, b);
                } else {
                    for (const auto& [a, b] : mp->mm_no_uv) m.add(a, b);
                }
            } else {
                for (const auto& [a, b] : mp->mm_no_uv) m.add(a, b);
            }
        } else if (const auto* iso = std::get_if<IsolatedComponent>(&ev)) {
            for (const auto& [a, b] : iso->best) m.add(a, b);
        } else {
            throw validation_error("unweighted event in weighted lift");
        }
    }

    m.validate_against(original.graph());
    Weight lifted = m.total_weight(original);
    if (lifted != checked_add(kernel_weight, trace.weight_offset()))
        throw internal_error("lifted weight " + std::to_string(lifted) +
                             " != kernel weight + offset " +
                             std::to_string(kernel_weight + trace.weight_offset()));
    return m;
}

}  // namespace matchred
