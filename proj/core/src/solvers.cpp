#include "matchred/solvers.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <unordered_map>

namespace matchred {

void BipartiteGraph::add_edge(int l, int r) {
    if (l < 0 || static_cast<std::size_t>(l) >= left_size || r < 0 ||
        static_cast<std::size_t>(r) >= right_size)
        throw identifier_error("bipartite edge endpoint out of range");
    auto& row = adj[l];
    auto it = std::lower_bound(row.begin(), row.end(), r);
    if (it == row.end() || *it != r) row.insert(it, r);
}

BipMatching hopcroft_karp(const BipartiteGraph& g) {
    const int kInf = std::numeric_limits<int>::max();
    const int nl = static_cast<int>(g.left_size);
    BipMatching m;
    m.mate_left.assign(g.left_size, -1);
    m.mate_right.assign(g.right_size, -1);

    std::vector<int> dist(g.left_size, kInf);

    auto bfs = [&]() {
        std::queue<int> q;
        bool reachable_free_right = false;
        for (int l = 0; l < nl; ++l) {
            if (m.mate_left[l] == -1) {
                dist[l] = 0;
                q.push(l);
            } else {
                dist[l] = kInf;
            }
        }
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : g.adj[l]) {
                int l2 = m.mate_right[r];
                if (l2 == -1) {
                    reachable_free_right = true;
                } else if (dist[l2] == kInf) {
                    dist[l2] = dist[l] + 1;
                    q.push(l2);
                }
            }
        }
        return reachable_free_right;
    };

    std::function<bool(int)> dfs = [&](int l) {
        for (int r : g.adj[l]) {
            int l2 = m.mate_right[r];
            if (l2 == -1 || (dist[l2] == dist[l] + 1 && dfs(l2))) {
                m.mate_left[l] = r;
                m.mate_right[r] = l;
                return true;
            }
        }
        dist[l] = kInf;
        return false;
    };

    while (bfs()) {
        for (int l = 0; l < nl; ++l)
            if (m.mate_left[l] == -1 && dfs(l)) ++m.size;
    }
    return m;
}

void Digraph::add_arc(int from, int to) {
    if (from < 0 || static_cast<std::size_t>(from) >= out.size() || to < 0 ||
        static_cast<std::size_t>(to) >= out.size())
        throw identifier_error("arc endpoint out of range");
    auto& row = out[from];
    auto it = std::lower_bound(row.begin(), row.end(), to);
    if (it == row.end() || *it != to) row.insert(it, to);
}

std::vector<std::vector<int>> kosaraju_scc(const Digraph& d) {
    const int n = static_cast<int>(d.size());
    std::vector<int> finish_order;
    finish_order.reserve(n);
    std::vector<char> seen(n, 0);

    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < d.out[v].size()) {
                int to = d.out[v][i++];
                if (!seen[to]) {
                    seen[to] = 1;
                    stack.emplace_back(to, 0);
                }
            } else {
                finish_order.push_back(v);
                stack.pop_back();
            }
        }
    }

    std::vector<std::vector<int>> rev(n);
    for (int v = 0; v < n; ++v)
        for (int to : d.out[v]) rev[to].push_back(v);

    // Second pass over the transpose in decreasing finish time emits the
    // condensation in topological order; flip to get sinks first.
    std::vector<std::vector<int>> comps;
    std::fill(seen.begin(), seen.end(), 0);
    for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
        if (seen[*it]) continue;
        comps.emplace_back();
        std::vector<int> stack{*it};
        seen[*it] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int to : rev[v])
                if (!seen[to]) {
                    seen[to] = 1;
                    stack.push_back(to);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    std::reverse(comps.begin(), comps.end());
    return comps;
}

namespace {

// Edmonds' algorithm with blossom contraction tracked through base[].
struct BlossomSolver {
    int n;
    std::vector<std::vector<int>> g;
    std::vector<int> match, parent, base;
    std::vector<char> used;

    explicit BlossomSolver(int n)
        : n(n), g(n), match(n, -1), parent(n, -1), base(n), used(n, 0) {}

    int lca(int a, int b) const {
        std::vector<char> mark(n, 0);
        int x = a;
        for (;;) {
            x = base[x];
            mark[x] = 1;
            if (match[x] == -1) break;
            x = parent[match[x]];
        }
        int y = b;
        for (;;) {
            y = base[y];
            if (mark[y]) return y;
            y = parent[match[y]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<char>& in_blossom) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g[v]) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // Odd cycle: contract the blossom around the lca.
                    int cur_base = lca(v, to);
                    std::vector<char> in_blossom(n, 0);
                    mark_path(v, cur_base, to, in_blossom);
                    mark_path(to, cur_base, v, in_blossom);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = cur_base;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent[v], next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }

    void solve() {
        for (int v = 0; v < n; ++v) {
            if (match[v] == -1) {
                int tail = find_augmenting_path(v);
                if (tail != -1) augment(tail);
            }
        }
    }
};

struct DenseView {
    std::vector<VertexId> ids;                 // sorted external ids
    std::map<VertexId, int> index;
    std::vector<std::uint32_t> adj_mask;       // only filled when n <= 32
};

DenseView make_dense(const Graph& g, std::size_t guard, const char* who) {
    DenseView d;
    d.ids = g.vertex_ids();
    if (d.ids.size() > guard)
        throw guard_error(std::string(who) + ": graph has " + std::to_string(d.ids.size()) +
                          " vertices, guard is " + std::to_string(guard));
    for (std::size_t i = 0; i < d.ids.size(); ++i) d.index[d.ids[i]] = static_cast<int>(i);
    d.adj_mask.assign(d.ids.size(), 0);
    for (std::size_t i = 0; i < d.ids.size(); ++i)
        for (VertexId u : g.neighbors(d.ids[i]))
            d.adj_mask[i] |= 1u << d.index.at(u);
    return d;
}

}  // namespace

Matching blossom_mcm(const Graph& g) {
    auto ids = g.vertex_ids();
    std::map<VertexId, int> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);

    BlossomSolver solver(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (VertexId u : g.neighbors(ids[i])) solver.g[i].push_back(index.at(u));

    solver.solve();

    Matching m;
    for (int v = 0; v < solver.n; ++v)
        if (solver.match[v] > v) m.add(ids[v], ids[solver.match[v]]);
    return m;
}

McmResult brute_force_mcm(const Graph& g) {
    DenseView d = make_dense(g, 20, "brute_force_mcm");
    const std::size_t n = d.ids.size();

    std::unordered_map<std::uint32_t, int> memo;
    std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
        if (mask == 0) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        int res = best(rest);
        std::uint32_t nb = d.adj_mask[v] & rest;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            res = std::max(res, 1 + best(rest & ~(1u << u)));
        }
        memo.emplace(mask, res);
        return res;
    };

    McmResult out;
    std::uint32_t mask = n == 32 ? ~0u : (1u << n) - 1;
    out.size = static_cast<std::size_t>(best(mask));
    while (mask) {
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        if (best(mask) == best(rest)) {
            mask = rest;
            continue;
        }
        std::uint32_t nb = d.adj_mask[v] & rest;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (best(mask) == 1 + best(rest & ~(1u << u))) {
                out.witness.add(d.ids[v], d.ids[u]);
                mask = rest & ~(1u << u);
                break;
            }
        }
    }
    return out;
}

MwmResult brute_force_mwm(const WeightedGraph& g) {
    DenseView d = make_dense(g.graph(), 18, "brute_force_mwm");

    auto edge_weight = [&](int v, int u) { return g.weight(d.ids[v], d.ids[u]); };

    std::unordered_map<std::uint32_t, Weight> memo;
    std::function<Weight(std::uint32_t)> best = [&](std::uint32_t mask) -> Weight {
        if (mask == 0) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        Weight res = best(rest);
        std::uint32_t nb = d.adj_mask[v] & rest;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            res = std::max(res, checked_add(edge_weight(v, u), best(rest & ~(1u << u))));
        }
        memo.emplace(mask, res);
        return res;
    };

    MwmResult out;
    std::uint32_t mask = (d.ids.size() == 32) ? ~0u : (1u << d.ids.size()) - 1;
    out.weight = best(mask);
    while (mask) {
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        if (best(mask) == best(rest)) {
            mask = rest;
            continue;
        }
        std::uint32_t nb = d.adj_mask[v] & rest;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (best(mask) == checked_add(edge_weight(v, u), best(rest & ~(1u << u)))) {
                out.witness.add(d.ids[v], d.ids[u]);
                mask = rest & ~(1u << u);
                break;
            }
        }
    }
    return out;
}

std::size_t brute_force_vc(const Graph& g) {
    DenseView d = make_dense(g, 20, "brute_force_vc");
    const std::size_t n = d.ids.size();

    std::unordered_map<std::uint32_t, std::size_t> memo;
    std::function<std::size_t(std::uint32_t)> vc = [&](std::uint32_t mask) -> std::size_t {
        // Pick the max-degree vertex still carrying edges: either cover it
        // or cover its whole neighborhood.
        int pick = -1;
        int pick_deg = 0;
        std::uint32_t scan = mask;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int deg = std::popcount(d.adj_mask[v] & mask);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        if (pick == -1) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::uint32_t nbrs = d.adj_mask[pick] & mask;
        std::size_t take_v = 1 + vc(mask & ~(1u << pick));
        std::size_t take_nbrs =
            static_cast<std::size_t>(std::popcount(nbrs)) + vc(mask & ~nbrs & ~(1u << pick));
        std::size_t res = std::min(take_v, take_nbrs);
        memo.emplace(mask, res);
        return res;
    };

    return vc(n == 32 ? ~0u : (1u << n) - 1);
}

}  // namespace matchred
