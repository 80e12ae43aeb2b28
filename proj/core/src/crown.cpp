#include "matchred/crown.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace matchred {

BipartiteDouble build_bipartite_double(const Graph& g) {
    BipartiteDouble d;
    d.originals = g.vertex_ids();
    for (std::size_t i = 0; i < d.originals.size(); ++i)
        d.index[d.originals[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < d.originals.size(); ++i) {
        d.bip.add_left();
        d.bip.add_right();
    }
    for (const auto& [v, nbrs] : g.adjacency()) {
        int iv = d.index.at(v);
        for (VertexId u : nbrs) d.bip.add_edge(iv, d.index.at(u));
    }
    return d;
}

DoubleCover konig_vertex_cover(const BipartiteDouble& d, const BipMatching& m) {
    const int n = static_cast<int>(d.originals.size());
    if (m.mate_left.size() != d.originals.size() || m.mate_right.size() != d.originals.size())
        throw validation_error("matching does not belong to this double cover");

    std::vector<char> zl(n, 0), zr(n, 0);
    std::queue<int> q;
    for (int l = 0; l < n; ++l) {
        if (m.mate_left[l] == -1) {
            zl[l] = 1;
            q.push(l);
        }
    }
    // Alternate: non-matching edges left to right, matching edges back.
    while (!q.empty()) {
        int l = q.front();
        q.pop();
        for (int r : d.bip.adj[l]) {
            if (r == m.mate_left[l] || zr[r]) continue;
            zr[r] = 1;
            int l2 = m.mate_right[r];
            if (l2 == -1)
                throw validation_error("matching is not maximum: augmenting path found");
            if (!zl[l2]) {
                zl[l2] = 1;
                q.push(l2);
            }
        }
    }

    DoubleCover cover;
    cover.left.assign(n, false);
    cover.right.assign(n, false);
    for (int i = 0; i < n; ++i) {
        cover.left[i] = !zl[i];
        cover.right[i] = zr[i] != 0;
        cover.size += cover.left[i] + cover.right[i];
    }
    if (cover.size != m.size) throw internal_error("König cover size differs from matching size");
    for (int l = 0; l < n; ++l)
        for (int r : d.bip.adj[l])
            if (!cover.left[l] && !cover.right[r]) throw internal_error("König cover misses an edge");
    return cover;
}

void LpSolution::validate(const Graph& g) const {
    std::size_t classified = zeros.size() + halves.size() + ones.size();
    if (classified != g.vertex_count())
        throw validation_error("LP solution does not classify every vertex exactly once");
    for (VertexId v : g.vertex_ids())
        if (!zeros.count(v) && !halves.count(v) && !ones.count(v))
            throw validation_error("LP solution misses vertex " + std::to_string(v));
    for (VertexId v : zeros)
        for (VertexId u : g.neighbors(v))
            if (!ones.count(u))
                throw validation_error("infeasible LP solution: zero vertex " + std::to_string(v) +
                                       " has non-one neighbor " + std::to_string(u));
    if (doubled_objective() > g.vertex_count())
        throw validation_error("LP solution worse than the all-half assignment");
}

LpSolution lp_solution_from_cover(const BipartiteDouble& d, const DoubleCover& cover) {
    const int n = static_cast<int>(d.originals.size());
    if (cover.left.size() != d.originals.size() || cover.right.size() != d.originals.size())
        throw validation_error("cover does not belong to this double cover");
    for (int l = 0; l < n; ++l)
        for (int r : d.bip.adj[l])
            if (!cover.left[l] && !cover.right[r])
                throw validation_error("invalid vertex cover: edge uncovered");

    LpSolution sol;
    for (int i = 0; i < n; ++i) {
        bool cl = cover.left[i], cr = cover.right[i];
        if (cl && cr)
            sol.ones.insert(d.original(i));
        else if (!cl && !cr)
            sol.zeros.insert(d.original(i));
        else
            sol.halves.insert(d.original(i));
    }
    return sol;
}

LpSolution maximal_persistency(const BipartiteDouble& d, const BipMatching& m) {
    LpSolution sol = lp_solution_from_cover(d, konig_vertex_cover(d, m));
    if (sol.halves.empty()) return sol;

    const int n = static_cast<int>(d.originals.size());
    std::vector<char> is_half(n, 0);
    for (VertexId v : sol.halves) is_half[d.index.at(v)] = 1;

    // The matching pairs the covered copy of every half vertex with an
    // uncovered half copy; these pairs are the contraction units of the
    // component digraph.
    std::vector<int> pair_of_right(n, -1);
    std::vector<std::pair<int, int>> pairs;  // (left copy, right copy)
    for (int l = 0; l < n; ++l) {
        if (!is_half[l]) continue;
        int r = m.mate_left[l];
        if (r < 0 || !is_half[r])
            throw internal_error("half copy not matched inside the half region");
        pair_of_right[r] = static_cast<int>(pairs.size());
        pairs.emplace_back(l, r);
    }

    Digraph pd(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [l, rmate] = pairs[p];
        for (int r : d.bip.adj[l]) {
            if (r == rmate || !is_half[r]) continue;
            pd.add_arc(static_cast<int>(p), pair_of_right[r]);
        }
    }

    // Sinks first: a component may move to {0,1} only after everything its
    // zero-side vertices lean on has been decided.
    for (const auto& comp : kosaraju_scc(pd)) {
        std::set<VertexId> iside, hside;
        for (int p : comp) {
            iside.insert(d.original(pairs[p].first));
            hside.insert(d.original(pairs[p].second));
        }
        bool movable = true;
        for (VertexId v : iside)
            if (hside.count(v)) movable = false;  // both copies present: stays half
        if (movable)
            for (VertexId v : iside)
                if (!sol.halves.count(v)) movable = false;
        if (movable)
            for (VertexId v : hside)
                if (!sol.halves.count(v)) movable = false;
        if (movable) {
            for (VertexId v : iside) {
                for (int r : d.bip.adj[d.index.at(v)]) {
                    VertexId u = d.original(r);
                    if (!sol.ones.count(u) && !hside.count(u)) {
                        movable = false;
                        break;
                    }
                }
                if (!movable) break;
            }
        }
        if (!movable) continue;
        for (VertexId v : iside) {
            sol.halves.erase(v);
            sol.zeros.insert(v);
        }
        for (VertexId v : hside) {
            sol.halves.erase(v);
            sol.ones.insert(v);
        }
    }
    return sol;
}

LpSolution maximal_persistency(const Graph& g) {
    BipartiteDouble d = build_bipartite_double(g);
    BipMatching m = hopcroft_karp(d.bip);
    LpSolution sol = maximal_persistency(d, m);
    sol.validate(g);
    return sol;
}

namespace {

std::vector<EdgePair> saturate(const Graph& g, const std::vector<VertexId>& from,
                               const std::vector<VertexId>& into) {
    BipartiteGraph b;
    std::map<VertexId, int> right_index;
    for (VertexId v : into) right_index[v] = b.add_right();
    std::vector<EdgePair> out;
    std::vector<int> lefts;
    for (VertexId h : from) {
        int l = b.add_left();
        lefts.push_back(l);
        for (VertexId u : g.neighbors(h)) {
            auto it = right_index.find(u);
            if (it != right_index.end()) b.add_edge(l, it->second);
        }
    }
    BipMatching m = hopcroft_karp(b);
    if (m.size != from.size()) return {};  // not saturable
    for (std::size_t i = 0; i < from.size(); ++i)
        out.emplace_back(from[i], into[static_cast<std::size_t>(m.mate_left[lefts[i]])]);
    return out;
}

}  // namespace

bool apply_lp_rule(Graph& g, const LpSolution& sol, ReductionTrace& trace) {
    sol.validate(g);
    if (sol.ones.empty() && sol.zeros.empty()) return false;

    LpRemove ev;
    ev.ones.assign(sol.ones.begin(), sol.ones.end());
    ev.zeros.assign(sol.zeros.begin(), sol.zeros.end());
    ev.saturating = saturate(g, ev.ones, ev.zeros);
    if (!sol.ones.empty() && ev.saturating.empty())
        throw internal_error("persistency bug: (ones, zeros) admits no saturating matching");

    for (VertexId v : ev.ones) g.remove_vertex(v);
    for (VertexId v : ev.zeros) g.remove_vertex(v);
    trace.push(std::move(ev));
    return true;
}

UnweightedReduction apply_lp_rule(const Graph& g, const LpSolution& sol) {
    UnweightedReduction out;
    out.kernel = g;
    apply_lp_rule(out.kernel, sol, out.trace);
    return out;
}

namespace {

void validate_crown_shape(const Graph& g, const std::set<VertexId>& head,
                          const std::set<VertexId>& indep) {
    if (indep.empty()) throw validation_error("crown: independent side is empty");
    std::set<VertexId> neighborhood;
    for (VertexId v : indep) {
        if (!g.has_vertex(v)) throw validation_error("crown: unknown vertex");
        for (VertexId u : g.neighbors(v)) {
            if (indep.count(u)) throw validation_error("crown: I is not independent");
            neighborhood.insert(u);
        }
    }
    if (neighborhood != head) throw validation_error("crown: H != N(I)");
}

void validate_saturating(const Graph& g, const std::set<VertexId>& head,
                         const std::set<VertexId>& indep, const std::vector<EdgePair>& pairs,
                         const std::set<VertexId>& must_cover) {
    std::set<VertexId> used_h, used_i;
    for (const auto& [h, i] : pairs) {
        if (!head.count(h) || !indep.count(i))
            throw validation_error("crown: matching pair outside (H, I)");
        if (!g.has_edge(h, i)) throw validation_error("crown: matching pair is not an edge");
        if (!used_h.insert(h).second || !used_i.insert(i).second)
            throw validation_error("crown: matching pairs overlap");
    }
    for (VertexId h : must_cover)
        if (!used_h.count(h)) throw validation_error("crown: matching does not saturate H");
}

}  // namespace

void apply_crown(Graph& g, const Crown& c, ReductionTrace& trace) {
    validate_crown_shape(g, c.head, c.indep);
    validate_saturating(g, c.head, c.indep, c.saturating, c.head);

    CrownRemove ev;
    ev.head.assign(c.head.begin(), c.head.end());
    ev.indep.assign(c.indep.begin(), c.indep.end());
    ev.saturating = c.saturating;
    for (VertexId v : ev.head) g.remove_vertex(v);
    for (VertexId v : ev.indep) g.remove_vertex(v);
    trace.push(std::move(ev));
}

UnweightedReduction apply_crown(const Graph& g, const Crown& c) {
    UnweightedReduction out;
    out.kernel = g;
    apply_crown(out.kernel, c, out.trace);
    return out;
}

std::optional<Crown> find_crown_bruteforce(const Graph& g) {
    auto ids = g.vertex_ids();
    const std::size_t n = ids.size();
    if (n > 16)
        throw guard_error("find_crown_bruteforce: " + std::to_string(n) + " vertices > 16");

    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < n; ++i) index[ids[i]] = static_cast<int>(i);
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (VertexId u : g.neighbors(ids[i])) adj[i] |= 1u << index.at(u);

    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t hmask = 0;
        bool independent = true;
        for (std::uint32_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (adj[v] & mask) {
                independent = false;
                break;
            }
            hmask |= adj[v];
        }
        if (!independent) continue;
        if (std::popcount(hmask) > std::popcount(mask)) continue;

        Crown c;
        for (std::uint32_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            c.indep.insert(ids[v]);
        }
        for (std::uint32_t scan = hmask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            c.head.insert(ids[v]);
        }
        c.saturating = saturate(g, std::vector<VertexId>(c.head.begin(), c.head.end()),
                                std::vector<VertexId>(c.indep.begin(), c.indep.end()));
        if (c.head.empty() || !c.saturating.empty()) return c;
    }
    return std::nullopt;
}

UnweightedReduction apply_relaxed_crown(const Graph& g, const RelaxedCrown& rc,
                                        bool assume_crown_free) {
    validate_crown_shape(g, rc.head, rc.indep);
    if (rc.head.empty()) throw validation_error("relaxed crown: H is empty");
    if (rc.head.size() > rc.indep.size() + 1)
        throw validation_error("relaxed crown: |H| exceeds |I| + 1");
    for (VertexId skip : rc.head) {
        auto it = rc.matchings.find(skip);
        if (it == rc.matchings.end())
            throw validation_error("relaxed crown: missing matching for a head vertex");
        std::set<VertexId> rest = rc.head;
        rest.erase(skip);
        for (const auto& [h, _] : it->second)
            if (h == skip) throw validation_error("relaxed crown: matching touches skipped vertex");
        validate_saturating(g, rc.head, rc.indep, it->second, rest);
    }
    if (!assume_crown_free) {
        if (find_crown_bruteforce(g))
            throw validation_error("relaxed crown: host graph contains a crown");
    }

    UnweightedReduction out;
    out.kernel = g;
    RelaxedCrownReplace ev;
    ev.head.assign(rc.head.begin(), rc.head.end());
    ev.indep.assign(rc.indep.begin(), rc.indep.end());
    ev.matchings = rc.matchings;

    std::set<VertexId> doomed = rc.head;
    doomed.insert(rc.indep.begin(), rc.indep.end());
    std::set<VertexId> border;
    for (VertexId h : rc.head)
        for (VertexId x : out.kernel.neighbors(h))
            if (!doomed.count(x)) border.insert(x);
    for (VertexId v : doomed) out.kernel.remove_vertex(v);
    ev.z = out.kernel.make_fresh_vertex();
    for (VertexId x : border) out.kernel.add_edge(ev.z, x);
    out.trace.push(std::move(ev));
    return out;
}

UnweightedReduction crown_kernelize(Graph g) {
    ReductionTrace trace;
    bool changed = true;
    while (changed) {
        changed = reduce_degrees(g, trace);
        if (!g.empty()) {
            LpSolution sol = maximal_persistency(g);
            if (apply_lp_rule(g, sol, trace)) changed = true;
        }
    }
    return {std::move(g), std::move(trace)};
}

Matching lift_matching_crown(const Graph& original, const ReductionTrace& trace,
                             const Matching& kernel_matching) {
    return lift_matching_unweighted(original, trace, kernel_matching);
}

}  // namespace matchred
