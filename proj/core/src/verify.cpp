#include "matchred/verify.hpp"

#include <sstream>

#include "matchred/crown.hpp"
#include "matchred/reduce_unweighted.hpp"
#include "matchred/solvers.hpp"

namespace matchred::verify {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

bool same_graph(const Graph& a, const Graph& b) {
    return a.adjacency() == b.adjacency();
}

bool same_graph(const WeightedGraph& a, const WeightedGraph& b) {
    return a.graph().adjacency() == b.graph().adjacency() && a.weights() == b.weights();
}

CheckResult fail(const std::string& what) {
    return {false, what};
}

}  // namespace

Graph random_graph(std::mt19937_64& rng, std::size_t max_n) {
    std::size_t n = draw(rng, 2, max_n);
    std::size_t tenths = draw(rng, 1, 9);
    Graph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(static_cast<VertexId>(v));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng() % 10 < tenths) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return g;
}

WeightedGraph random_weighted_graph(std::mt19937_64& rng, std::size_t max_n, Weight max_weight) {
    Graph skeleton = random_graph(rng, max_n);
    WeightedGraph g;
    for (VertexId v : skeleton.vertex_ids()) g.add_vertex(v);
    for (const auto& [v, nbrs] : skeleton.adjacency())
        for (VertexId u : nbrs)
            if (v < u) g.add_edge(v, u, 1 + rng() % max_weight);
    return g;
}

Graph random_tree(std::mt19937_64& rng, std::size_t max_n) {
    std::size_t n = draw(rng, 1, max_n);
    Graph g;
    g.add_vertex(0);
    for (std::size_t v = 1; v < n; ++v)
        g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(rng() % v));
    return g;
}

WeightedGraph random_weighted_tree(std::mt19937_64& rng, std::size_t max_n, Weight max_weight) {
    Graph skeleton = random_tree(rng, max_n);
    WeightedGraph g;
    for (VertexId v : skeleton.vertex_ids()) g.add_vertex(v);
    for (const auto& [v, nbrs] : skeleton.adjacency())
        for (VertexId u : nbrs)
            if (v < u) g.add_edge(v, u, 1 + rng() % max_weight);
    return g;
}

Graph cycle_graph(std::size_t n) {
    Graph g;
    for (std::size_t v = 0; v < n; ++v)
        g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n));
    return g;
}

CheckResult check_unweighted_instance(const Graph& g, bool crown_pipeline) {
    try {
        UnweightedReduction red =
            crown_pipeline ? crown_kernelize(g) : apply_degree_rules_exhaustive(g);

        Graph replayed = g;
        red.trace.replay(replayed);
        if (!same_graph(replayed, red.kernel)) return fail("trace replay does not match kernel");

        McmResult whole = brute_force_mcm(g);
        McmResult kern = brute_force_mcm(red.kernel);
        if (whole.size != kern.size + red.trace.cardinality_offset())
            return fail("mm(G) != mm(kernel) + offset: " + std::to_string(whole.size) + " vs " +
                        std::to_string(kern.size) + " + " +
                        std::to_string(red.trace.cardinality_offset()));

        Matching lifted = lift_matching_unweighted(g, red.trace, kern.witness);
        if (lifted.size() != whole.size) return fail("lifted matching is not optimal");

        if (!crown_pipeline) {
            for (VertexId v : red.kernel.vertex_ids())
                if (red.kernel.degree(v) < 3) return fail("degree-rule kernel has degree <= 2");
            UnweightedReduction again = apply_degree_rules_exhaustive(red.kernel);
            if (!again.trace.empty()) return fail("degree rules not idempotent");
        }
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_degree_bound(const Graph& g) {
    try {
        UnweightedReduction red = apply_degree_rules_exhaustive(g);
        check_fes_kernel_bound(g, red.kernel);
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_crown_tau_bound(const Graph& g) {
    try {
        UnweightedReduction red = crown_kernelize(g);
        std::size_t tau = brute_force_vc(g);
        if (red.kernel.vertex_count() > 2 * tau)
            return fail("crown kernel has " + std::to_string(red.kernel.vertex_count()) +
                        " vertices > 2*tau = " + std::to_string(2 * tau));
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_crown_equivalence(const Graph& g) {
    try {
        LpSolution sol = maximal_persistency(g);
        UnweightedReduction lp = apply_lp_rule(g, sol);
        if (find_crown_bruteforce(lp.kernel))
            return fail("LP-reduced graph still contains a crown");

        Graph fixpoint = g;
        ReductionTrace crowns;
        while (auto c = find_crown_bruteforce(fixpoint)) apply_crown(fixpoint, *c, crowns);
        if (fixpoint.vertex_ids() != lp.kernel.vertex_ids())
            return fail("LP fixpoint and crown fixpoint differ");

        McmResult whole = brute_force_mcm(g);
        McmResult kern = brute_force_mcm(lp.kernel);
        if (whole.size != kern.size + lp.trace.cardinality_offset())
            return fail("LP rule does not preserve mm");
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_weighted_instance(const WeightedGraph& g, PipelineMode mode) {
    try {
        WeightedReduction red = weighted_kernel_pipeline(g, mode);

        WeightedGraph replayed = g;
        red.trace.replay(replayed);
        if (!same_graph(replayed, red.kernel)) return fail("trace replay does not match kernel");

        MwmResult whole = brute_force_mwm(g);
        MwmResult kern = brute_force_mwm(red.kernel);
        if (whole.weight != checked_add(kern.weight, red.trace.weight_offset()))
            return fail("w(G) != w(kernel) + offset: " + std::to_string(whole.weight) + " vs " +
                        std::to_string(kern.weight) + " + " +
                        std::to_string(red.trace.weight_offset()));

        Matching lifted = lift_matching_weighted(g, red.trace, kern.witness);
        if (lifted.total_weight(g) != whole.weight)
            return fail("lifted matching is not optimal");
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_weighted_bound(const WeightedGraph& g) {
    try {
        WeightedReduction red = weighted_kernel_pipeline(g, PipelineMode::prescribed);
        check_weighted_kernel_bound(g, red.kernel);
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_solvers_instance(const Graph& g) {
    try {
        McmResult bf = brute_force_mcm(g);
        Matching blossom = blossom_mcm(g);
        blossom.validate_against(g);
        if (blossom.size() != bf.size)
            return fail("blossom size " + std::to_string(blossom.size()) + " != brute force " +
                        std::to_string(bf.size));

        BipartiteDouble d = build_bipartite_double(g);
        BipMatching m = hopcroft_karp(d.bip);
        DoubleCover cover = konig_vertex_cover(d, m);  // checks |cover| == |M| and coverage
        (void)cover;
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_hopcroft_instance(std::mt19937_64& rng, std::size_t max_side) {
    try {
        max_side = std::min<std::size_t>(max_side, 10);  // both sides must fit the oracle guard
        std::size_t nl = draw(rng, 1, max_side);
        std::size_t nr = draw(rng, 1, max_side);
        std::size_t tenths = draw(rng, 1, 9);
        BipartiteGraph b;
        Graph as_graph;
        for (std::size_t l = 0; l < nl; ++l) {
            b.add_left();
            as_graph.add_vertex(static_cast<VertexId>(l));
        }
        for (std::size_t r = 0; r < nr; ++r) {
            b.add_right();
            as_graph.add_vertex(static_cast<VertexId>(nl + r));
        }
        for (std::size_t l = 0; l < nl; ++l)
            for (std::size_t r = 0; r < nr; ++r)
                if (rng() % 10 < tenths) {
                    b.add_edge(static_cast<int>(l), static_cast<int>(r));
                    as_graph.add_edge(static_cast<VertexId>(l), static_cast<VertexId>(nl + r));
                }
        BipMatching m = hopcroft_karp(b);
        McmResult bf = brute_force_mcm(as_graph);
        if (m.size != bf.size)
            return fail("hopcroft_karp size " + std::to_string(m.size) + " != brute force " +
                        std::to_string(bf.size));
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

CheckResult check_export_instance(const WeightedGraph& g) {
    try {
        PerfectMatchingExport exp = export_perfect_matching_instance(g);
        if (exp.instance.vertex_count() != 2 * g.vertex_count())
            return fail("export vertex count != 2n");
        if (exp.instance.edge_count() != 2 * g.edge_count() + g.vertex_count())
            return fail("export edge count != 2m + n");
        for (const auto& [v, c] : exp.copy_of)
            if (!exp.instance.has_edge(v, c) || exp.instance.weight(v, c) != 0)
                return fail("missing zero-weight link edge");
        MwmResult doubled = brute_force_mwm(exp.instance);
        MwmResult base = brute_force_mwm(g);
        if (doubled.weight != 2 * base.weight)
            return fail("doubled optimum " + std::to_string(doubled.weight) + " != 2 * " +
                        std::to_string(base.weight));
        return {};
    } catch (const std::exception& e) {
        return fail(std::string("exception: ") + e.what());
    }
}

SuiteReport run_verify_suite(const SuiteOptions& opt) {
    SuiteReport report;
    std::mt19937_64 rng(opt.seed);

    auto record = [&](const char* name, std::size_t trial, const CheckResult& r) {
        ++report.checks;
        if (!r.ok) {
            ++report.failures;
            std::ostringstream msg;
            msg << name << " trial " << trial << ": " << r.detail;
            report.messages.push_back(msg.str());
        }
    };

    for (std::size_t t = 0; t < opt.trials; ++t) {
        if (opt.weighted) {
            WeightedGraph g = random_weighted_graph(rng, opt.max_n, 10);
            if (opt.inject_failure && t == 0) {
                // Self-test: a wrong expected value must be caught and reported.
                MwmResult bf = brute_force_mwm(g);
                WeightedReduction red = weighted_kernel_pipeline(g, PipelineMode::exhaustive);
                MwmResult kern = brute_force_mwm(red.kernel);
                bool broken =
                    bf.weight + 1 == checked_add(kern.weight, red.trace.weight_offset());
                record("injected-weighted", t,
                       broken ? CheckResult{} : fail("injected failure detected"));
                continue;
            }
            record("weighted-exhaustive", t,
                   check_weighted_instance(g, PipelineMode::exhaustive));
            record("weighted-prescribed", t,
                   check_weighted_instance(g, PipelineMode::prescribed));
            record("weighted-bound", t, check_weighted_bound(g));
            if (g.vertex_count() <= 8) record("export", t, check_export_instance(g));
        } else {
            Graph g = random_graph(rng, opt.max_n);
            if (opt.inject_failure && t == 0) {
                McmResult bf = brute_force_mcm(g);
                UnweightedReduction red = apply_degree_rules_exhaustive(g);
                McmResult kern = brute_force_mcm(red.kernel);
                bool broken = bf.size + 1 == kern.size + red.trace.cardinality_offset();
                record("injected-unweighted", t,
                       broken ? CheckResult{} : fail("injected failure detected"));
                continue;
            }
            record("degree-rules", t, check_unweighted_instance(g, false));
            record("crown-pipeline", t, check_unweighted_instance(g, true));
            record("degree-bound", t, check_degree_bound(g));
            record("crown-tau-bound", t, check_crown_tau_bound(g));
            record("solvers", t, check_solvers_instance(g));
            record("hopcroft", t, check_hopcroft_instance(rng, opt.max_n));
            if (t % 2 == 0) record("lp-crown-equivalence", t, check_crown_equivalence(g));
        }
    }
    return report;
}

}  // namespace matchred::verify
