#ifndef MATCHRED_VERIFY_HPP
#define MATCHRED_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matchred/graph.hpp"
#include "matchred/reduce_weighted.hpp"

namespace matchred::verify {

// Erdős–Rényi with n in [2, max_n] and edge probability drawn from
// {0.1, ..., 0.9}; vertices 0..n-1 are present even when isolated.
Graph random_graph(std::mt19937_64& rng, std::size_t max_n);
WeightedGraph random_weighted_graph(std::mt19937_64& rng, std::size_t max_n, Weight max_weight);
Graph random_tree(std::mt19937_64& rng, std::size_t max_n);
WeightedGraph random_weighted_tree(std::mt19937_64& rng, std::size_t max_n, Weight max_weight);
Graph cycle_graph(std::size_t n);

struct CheckResult {
    bool ok = true;
    std::string detail;
};

// Degree rules or the full crown pipeline against the brute-force
// optimum: offset equation, exact lift, forward-replay reproduction,
// and (degree rules) min degree 3 plus idempotence.
CheckResult check_unweighted_instance(const Graph& g, bool crown_pipeline);

// 2k/3k bound of the degree-rule kernel (k = 0 forces an empty kernel).
CheckResult check_degree_bound(const Graph& g);

// Crown-pipeline kernel has at most 2 * vc(g) vertices.
CheckResult check_crown_tau_bound(const Graph& g);

// LP persistency vs oracle-driven crown removal: the LP-reduced graph is
// crown-free and both fixpoints share the same vertex set.
CheckResult check_crown_equivalence(const Graph& g);

// Weighted pipeline against brute force: offset equation, exact lift,
// forward-replay reproduction.
CheckResult check_weighted_instance(const WeightedGraph& g, PipelineMode mode);

// 7k/9k bound of the prescribed-mode kernel.
CheckResult check_weighted_bound(const WeightedGraph& g);

// blossom_mcm against brute force plus König equality on the double.
CheckResult check_solvers_instance(const Graph& g);

// hopcroft_karp against brute force on a random bipartite instance.
CheckResult check_hopcroft_instance(std::mt19937_64& rng, std::size_t max_side);

// Doubled perfect-matching instance: size formulas and weight doubling.
CheckResult check_export_instance(const WeightedGraph& g);

struct SuiteOptions {
    std::size_t trials = 200;
    std::size_t max_n = 12;
    std::uint64_t seed = 20240601;
    bool weighted = false;
    bool inject_failure = false;  // harness self-test: forces one failure
};

struct SuiteReport {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> messages;
};

SuiteReport run_verify_suite(const SuiteOptions& opt);

}  // namespace matchred::verify

#endif
