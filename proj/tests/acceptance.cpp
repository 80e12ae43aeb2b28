// Acceptance suite: one pass/fail line per criterion, exit code equals
// the number of failed criteria. Criteria are randomized property checks
// against brute-force oracles plus fixed golden instances; every
// tolerance is exact.

#include <chrono>
#include <cstdio>
#include <deque>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "matchred/crown.hpp"
#include "matchred/reduce_unweighted.hpp"
#include "matchred/reduce_weighted.hpp"
#include "matchred/solvers.hpp"
#include "matchred/verify.hpp"

using namespace matchred;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const char* title, bool ok, const std::string& detail = "") {
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

WeightedGraph deg1_figure() {
    WeightedGraph g;
    g.add_edge(0, 1, 5);  // v-u
    g.add_edge(1, 2, 6);  // u-a
    g.add_edge(1, 4, 9);  // u-b
    g.add_edge(1, 3, 3);  // u-c
    g.add_edge(4, 3, 4);  // b-c
    return g;
}

WeightedGraph not_confluent(bool top) {
    WeightedGraph g;
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, top ? 1 : 2);
    g.add_edge(2, 4, top ? 3 : 4);
    g.add_edge(4, 5, top ? 1 : 2);
    g.add_edge(5, 3, 3);
    g.add_edge(2, 6, 2);
    g.add_edge(6, 3, 2);
    return g;
}

// Rule-at-a-time degree-one elimination with immediate reweighting; the
// quadratic reference the counter algorithm must agree with.
std::pair<WeightedGraph, Weight> naive_deg1(WeightedGraph g) {
    Weight offset = 0;
    std::deque<VertexId> work;
    for (VertexId v : g.vertex_ids())
        if (g.degree(v) == 1) work.push_back(v);
    while (!work.empty()) {
        VertexId v = work.front();
        work.pop_front();
        if (!g.has_vertex(v) || g.degree(v) != 1) continue;
        VertexId u = *g.neighbors(v).begin();
        Weight w = g.weight(u, v);
        offset += w;
        g.remove_vertex(v);
        std::vector<std::pair<VertexId, Weight>> updates;
        for (VertexId x : g.neighbors(u)) {
            Weight wx = g.weight(u, x);
            updates.emplace_back(x, wx > w ? wx - w : 0);
        }
        for (auto [x, wx] : updates) g.set_weight(u, x, wx);
        if (g.has_vertex(u) && g.degree(u) == 1) work.push_back(u);
    }
    return {std::move(g), offset};
}

std::vector<Graph> suite1;
std::vector<WeightedGraph> suite2;

void criterion1() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(101);
    std::string detail;
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
        Graph g = verify::random_graph(rng, 14);
        suite1.push_back(g);
        for (bool crown : {false, true}) {
            auto r = verify::check_unweighted_instance(g, crown);
            if (!r.ok) {
                ok = false;
                detail = "trial " + std::to_string(t) + ": " + r.detail;
                break;
            }
        }
    }
    double secs = seconds_since(t0);
    if (ok && secs >= 60.0) {
        ok = false;
        detail = "took " + std::to_string(secs) + "s, limit 60s";
    }
    if (ok) {
        std::ostringstream d;
        d << "1000 graphs, both rule sets, " << secs << "s";
        detail = d.str();
    }
    report(1, "unweighted oracle equivalence + exact lift", ok, detail);
}

void criterion2() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(102);
    std::string detail;
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
        WeightedGraph g = verify::random_weighted_graph(rng, 12, 10);
        suite2.push_back(g);
        for (auto mode : {PipelineMode::prescribed, PipelineMode::exhaustive}) {
            auto r = verify::check_weighted_instance(g, mode);
            if (!r.ok) {
                ok = false;
                detail = "trial " + std::to_string(t) + ": " + r.detail;
                break;
            }
        }
    }
    double secs = seconds_since(t0);
    if (ok && secs >= 120.0) {
        ok = false;
        detail = "took " + std::to_string(secs) + "s, limit 120s";
    }
    if (ok) {
        std::ostringstream d;
        d << "1000 graphs, both modes, " << secs << "s";
        detail = d.str();
    }
    report(2, "weighted oracle equivalence + exact lift", ok, detail);
}

void criterion3() {
    bool ok = true;
    std::string detail;
    auto run = [&](const Graph& g, const std::string& label) {
        if (!ok) return;
        auto r = verify::check_degree_bound(g);
        if (!r.ok) {
            ok = false;
            detail = label + ": " + r.detail;
        }
    };
    for (std::size_t i = 0; i < suite1.size(); ++i)
        run(suite1[i], "suite1[" + std::to_string(i) + "]");
    for (std::size_t i = 0; i < suite2.size(); ++i)
        run(suite2[i].graph(), "suite2[" + std::to_string(i) + "]");
    std::mt19937_64 rng(103);
    for (int t = 0; t < 100; ++t) {
        Graph f = verify::random_tree(rng, 30);
        run(f, "forest");
        if (ok) {
            auto red = apply_degree_rules_exhaustive(f);
            if (!red.kernel.empty()) {
                ok = false;
                detail = "forest kernel not empty";
            }
        }
    }
    for (std::size_t n = 3; n <= 40; ++n) run(verify::cycle_graph(n), "C" + std::to_string(n));
    report(3, "degree-rule kernel within 2k vertices / 3k edges", ok, detail);
}

void criterion4() {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < suite1.size() && ok; ++i) {
        auto r = verify::check_crown_tau_bound(suite1[i]);
        if (!r.ok) {
            ok = false;
            detail = "suite1[" + std::to_string(i) + "]: " + r.detail;
        }
    }
    report(4, "crown-pipeline kernel within twice the vertex cover number", ok, detail);
}

void criterion5() {
    std::mt19937_64 rng(105);
    bool ok = true;
    std::string detail;
    for (int t = 0; t < 500 && ok; ++t) {
        Graph g = verify::random_graph(rng, 14);
        auto r = verify::check_crown_equivalence(g);
        if (!r.ok) {
            ok = false;
            detail = "trial " + std::to_string(t) + ": " + r.detail;
        }
    }
    report(5, "LP persistency equals exhaustive crown removal", ok, detail);
}

void criterion6() {
    bool ok = true;
    std::string detail;

    // (a) degree-one figure: one application leaves weights 1/4/0/4 and
    // pays 5; the overall optimum is 10.
    {
        WeightedGraph g = deg1_figure();
        ok = ok && brute_force_mwm(g).weight == 10;
        WeightedGraph one = g;
        one.remove_vertex(0);
        for (VertexId x : {2, 3, 4}) {
            Weight w = one.weight(1, x);
            one.set_weight(1, x, w > 5 ? w - 5 : 0);
        }
        ok = ok && one.weight(1, 2) == 1 && one.weight(1, 4) == 4 && one.weight(1, 3) == 0 &&
             one.weight(3, 4) == 4;
        ok = ok && brute_force_mwm(one).weight == 5;
        auto red = weighted_kernel_pipeline(g, PipelineMode::exhaustive);
        Matching lifted =
            lift_matching_weighted(g, red.trace, brute_force_mwm(red.kernel).witness);
        ok = ok && lifted.total_weight(g) == 10 && lifted.edges().count({1, 2}) == 1 &&
             lifted.edges().count({3, 4}) == 1;
        if (!ok) detail = "(a) degree-one figure";
    }

    // (b) C5: the crown pass removes nothing, degree rules pay 2.
    if (ok) {
        Graph c5 = verify::cycle_graph(5);
        auto lp = apply_lp_rule(c5, maximal_persistency(c5));
        ok = lp.kernel.vertex_count() == 5 && lp.trace.cardinality_offset() == 0;
        auto deg = apply_degree_rules_exhaustive(c5);
        ok = ok && deg.kernel.empty() && deg.trace.cardinality_offset() == 2;
        if (!ok) detail = "(b) C5";
    }

    // (c) K_{3,5}: degree rules remove nothing, the crown pass pays 3.
    if (ok) {
        Graph k35;
        for (VertexId a = 0; a < 3; ++a)
            for (VertexId b = 0; b < 5; ++b) k35.add_edge(a, 3 + b);
        ok = apply_degree_rules_exhaustive(k35).trace.empty();
        auto red = crown_kernelize(k35);
        ok = ok && red.kernel.empty() && red.trace.cardinality_offset() == 3;
        if (!ok) detail = "(c) K_{3,5}";
    }

    // (d) non-confluent instances: either rule order accounts for the
    // full brute-force optimum.
    if (ok) {
        for (bool top : {true, false}) {
            WeightedGraph g = not_confluent(top);
            Weight best = brute_force_mwm(g).weight;
            for (auto order : {RuleOrder::deg1_first, RuleOrder::paths_first}) {
                auto red = weighted_kernel_pipeline(g, PipelineMode::exhaustive, order);
                Weight accounted =
                    checked_add(brute_force_mwm(red.kernel).weight, red.trace.weight_offset());
                if (accounted != best) ok = false;
            }
            if (top) {
                auto red = weighted_kernel_pipeline(g, PipelineMode::exhaustive,
                                                    RuleOrder::deg1_first);
                if (!red.kernel.empty() || red.trace.weight_offset() != best) ok = false;
            }
        }
        if (!ok) detail = "(d) rule-order instances";
    }

    report(6, "golden instances reproduce exactly", ok, detail);
}

void criterion7() {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < suite2.size() && ok; ++i) {
        if (suite2[i].graph().feedback_edge_number() == 0) continue;
        auto r = verify::check_weighted_bound(suite2[i]);
        if (!r.ok) {
            ok = false;
            detail = "suite2[" + std::to_string(i) + "]: " + r.detail;
        }
    }
    report(7, "prescribed weighted kernel within 7k vertices / 9k edges", ok, detail);
}

void criterion8() {
    bool ok = true;
    std::string detail;

    std::mt19937_64 rng(108);
    WeightedGraph star;
    const std::size_t leaves = 100000;
    for (std::size_t i = 1; i <= leaves; ++i)
        star.add_edge(0, static_cast<VertexId>(i), 1 + rng() % 1000);
    auto t0 = Clock::now();
    ReductionTrace trace;
    WeightedGraph reduced = star;
    apply_deg1_weighted_exhaustive(reduced, trace);
    double secs = seconds_since(t0);
    if (secs >= 1.0) {
        ok = false;
        detail = "100k-leaf star took " + std::to_string(secs) + "s";
    }

    for (std::size_t n = 1; n <= 100 && ok; ++n) {
        WeightedGraph small;
        for (std::size_t i = 1; i <= n; ++i)
            small.add_edge(0, static_cast<VertexId>(i), 1 + rng() % 1000);
        WeightedGraph counter = small;
        ReductionTrace t;
        apply_deg1_weighted_exhaustive(counter, t);
        auto [naive_kernel, naive_offset] = naive_deg1(small);
        if (t.weight_offset() != naive_offset ||
            counter.graph().adjacency() != naive_kernel.graph().adjacency() ||
            counter.weights() != naive_kernel.weights()) {
            ok = false;
            detail = "counter and naive outputs differ on a " + std::to_string(n) + "-leaf star";
        }
    }
    if (ok) {
        std::ostringstream d;
        d << "100k-leaf star in " << secs << "s, naive agreement up to 100 leaves";
        detail = d.str();
    }
    report(8, "counter-based degree-one sweep is fast and faithful", ok, detail);
}

void criterion9() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(109);
    for (int t = 0; t < 1000 && ok; ++t) {
        auto r = verify::check_hopcroft_instance(rng, 10);
        if (!r.ok) {
            ok = false;
            detail = "hopcroft trial " + std::to_string(t) + ": " + r.detail;
        }
    }
    for (int t = 0; t < 1000 && ok; ++t) {
        Graph g = verify::random_graph(rng, 14);
        auto r = verify::check_solvers_instance(g);  // blossom + König on the double
        if (!r.ok) {
            ok = false;
            detail = "solver trial " + std::to_string(t) + ": " + r.detail;
        }
    }
    report(9, "solver cross-checks against brute force and König equality", ok, detail);
}

void criterion10() {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(110);
    for (int t = 0; t < 200 && ok; ++t) {
        WeightedGraph g = verify::random_weighted_graph(rng, 8, 10);
        auto r = verify::check_export_instance(g);
        if (!r.ok) {
            ok = false;
            detail = "trial " + std::to_string(t) + ": " + r.detail;
        }
    }
    report(10, "perfect-matching export doubles sizes and optima", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures)
        std::printf("FAILED: %d criteria\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures;
}
