// matchred: exact data reduction for maximum matching instances.
//
// Subcommands: reduce, solve, verify, stats, bench. Graphs are plain
// edge lists ("u v" or "u v w" per line, '#' comments). Exit codes:
// 0 ok, 1 usage, 2 parse/format error, 3 verification failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchred/crown.hpp"
#include "matchred/io.hpp"
#include "matchred/reduce_unweighted.hpp"
#include "matchred/reduce_weighted.hpp"
#include "matchred/solvers.hpp"
#include "matchred/verify.hpp"

namespace {

using namespace matchred;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

struct CsvWriter {
    std::ostream* out;
    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) *out << ',';
            *out << csv_field(fields[i]);
        }
        *out << '\n';
    }
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

void note_drops(const std::string& path, const ParseStats& stats) {
    if (stats.duplicate_edges || stats.self_loops)
        std::cerr << path << ": dropped " << stats.duplicate_edges << " duplicate edge(s), "
                  << stats.self_loops << " self-loop(s)\n";
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open " + path);
    ParseStats stats;
    Graph g = parse_edge_list(in, &stats);
    note_drops(path, stats);
    return g;
}

WeightedGraph load_weighted_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open " + path);
    ParseStats stats;
    WeightedGraph g = parse_weighted_edge_list(in, &stats);
    note_drops(path, stats);
    return g;
}

// Relabels vertices by a seeded shuffle of the id set. Isomorphic input,
// different processing order; the robustness protocol for benchmarks.
std::map<VertexId, VertexId> permutation_map(const std::vector<VertexId>& ids,
                                             std::uint64_t seed) {
    std::vector<VertexId> shuffled = ids;
    std::mt19937_64 rng(seed);
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng() % i]);
    std::map<VertexId, VertexId> map;
    for (std::size_t i = 0; i < ids.size(); ++i) map[ids[i]] = shuffled[i];
    return map;
}

Graph permute_graph(const Graph& g, std::uint64_t seed) {
    auto map = permutation_map(g.vertex_ids(), seed);
    Graph out;
    for (VertexId v : g.vertex_ids()) out.add_vertex(map[v]);
    for (const auto& [v, nbrs] : g.adjacency())
        for (VertexId u : nbrs)
            if (v < u) out.add_edge(map[v], map[u]);
    return out;
}

WeightedGraph permute_graph(const WeightedGraph& g, std::uint64_t seed) {
    auto map = permutation_map(g.vertex_ids(), seed);
    WeightedGraph out;
    for (VertexId v : g.vertex_ids()) out.add_vertex(map[v]);
    for (const auto& [e, w] : g.weights()) out.add_edge(map[e.first], map[e.second], w);
    return out;
}

struct EventCounts {
    std::size_t deg0 = 0, deg1 = 0, deg2 = 0, lp = 0, lp_removed = 0, crowns = 0;
    std::size_t wzero_edges = 0, wzero_vertices = 0, wdeg1 = 0, pend_cycles = 0, max_paths = 0,
                isolated = 0;
};

EventCounts count_events(const ReductionTrace& trace) {
    EventCounts c;
    for (const auto& ev : trace.events()) {
        if (std::get_if<Deg0Delete>(&ev)) ++c.deg0;
        else if (std::get_if<Deg1Match>(&ev)) ++c.deg1;
        else if (std::get_if<Deg2Merge>(&ev)) ++c.deg2;
        else if (const auto* lp = std::get_if<LpRemove>(&ev)) {
            ++c.lp;
            c.lp_removed += lp->ones.size() + lp->zeros.size();
        } else if (std::get_if<CrownRemove>(&ev)) ++c.crowns;
        else if (std::get_if<WZeroEdgeDelete>(&ev)) ++c.wzero_edges;
        else if (std::get_if<WZeroVertexDelete>(&ev)) ++c.wzero_vertices;
        else if (std::get_if<WDeg1>(&ev)) ++c.wdeg1;
        else if (std::get_if<PendCycle>(&ev)) ++c.pend_cycles;
        else if (std::get_if<MaxPath>(&ev)) ++c.max_paths;
        else if (std::get_if<IsolatedComponent>(&ev)) ++c.isolated;
    }
    return c;
}

struct CommonOpts {
    bool weighted = false;
    std::string rules = "all";           // unweighted: degree | crown | all
    std::string mode = "exhaustive";     // weighted: prescribed | exhaustive
    std::optional<std::uint64_t> seed;
    std::string out_path;                // CSV destination ("" = stdout)
    std::string format = "edgelist";     // kernel output: edgelist | dimacs
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_seed = true) {
    cmd->add_flag("--weighted", o.weighted, "treat input as weighted edge list (u v w)");
    cmd->add_option("--rules", o.rules, "unweighted rule set: degree, crown, or all")
        ->check(CLI::IsMember({"degree", "crown", "all"}));
    cmd->add_option("--mode", o.mode, "weighted pipeline mode")
        ->check(CLI::IsMember({"prescribed", "exhaustive"}));
    if (with_seed)
        cmd->add_option("--seed", o.seed, "permute vertex ids with this seed before reducing");
    cmd->add_option("--out", o.out_path, "write CSV report here instead of stdout");
}

UnweightedReduction reduce_unweighted_by(const Graph& g, const std::string& rules) {
    if (rules == "degree") return apply_degree_rules_exhaustive(g);
    if (rules == "crown") {
        // LP/crown pass alone; one persistency round removes every crown.
        UnweightedReduction out;
        out.kernel = g;
        if (!out.kernel.empty())
            apply_lp_rule(out.kernel, maximal_persistency(out.kernel), out.trace);
        return out;
    }
    return crown_kernelize(g);
}

std::ofstream open_or_die(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error(0, "cannot write " + path);
    return out;
}

const std::vector<std::string> kReportHeader = {
    "input",          "kind",       "pipeline",    "seed",        "n",
    "m",              "kernel_n",   "kernel_m",    "card_offset", "weight_offset",
    "fes",            "deg0",       "deg1",        "deg2",        "lp_events",
    "lp_removed",     "crowns",     "wzero_edges", "wzero_vertices", "wdeg1",
    "pend_cycles",    "max_paths",  "isolated",    "parse_ms",    "reduce_ms",
    "solve_ms",       "lift_ms"};

struct ReportRow {
    std::string input, kind, pipeline, seed;
    std::size_t n = 0, m = 0, kernel_n = 0, kernel_m = 0;
    std::uint64_t card_offset = 0;
    Weight weight_offset = 0;
    std::size_t fes = 0;
    EventCounts counts;
    double parse_ms = 0, reduce_ms = 0, solve_ms = 0, lift_ms = 0;

    std::vector<std::string> fields() const {
        auto s = [](auto v) { return std::to_string(v); };
        return {input,
                kind,
                pipeline,
                seed,
                s(n),
                s(m),
                s(kernel_n),
                s(kernel_m),
                s(card_offset),
                s(weight_offset),
                s(fes),
                s(counts.deg0),
                s(counts.deg1),
                s(counts.deg2),
                s(counts.lp),
                s(counts.lp_removed),
                s(counts.crowns),
                s(counts.wzero_edges),
                s(counts.wzero_vertices),
                s(counts.wdeg1),
                s(counts.pend_cycles),
                s(counts.max_paths),
                s(counts.isolated),
                fmt(parse_ms),
                fmt(reduce_ms),
                fmt(solve_ms),
                fmt(lift_ms)};
    }
};

// Report rows append to --out so loops over many inputs accumulate one
// CSV; the header is written only when the file starts empty.
std::ostream& report_stream(const std::string& path, std::ofstream& file, bool& want_header) {
    if (path.empty()) {
        want_header = true;
        return std::cout;
    }
    bool fresh = true;
    {
        std::ifstream probe(path);
        fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
    }
    file.open(path, std::ios::app);
    if (!file) throw parse_error(0, "cannot write " + path);
    want_header = fresh;
    return file;
}

void emit_report(const std::string& path, const ReportRow& row) {
    std::ofstream file;
    bool want_header = false;
    CsvWriter csv{&report_stream(path, file, want_header)};
    if (want_header) csv.row(kReportHeader);
    csv.row(row.fields());
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const std::string& input, const CommonOpts& o, const std::string& kernel_out,
               const std::string& trace_out) {
    ReportRow row;
    row.input = input;
    row.kind = o.weighted ? "weighted" : "unweighted";
    row.pipeline = o.weighted ? o.mode : o.rules;
    row.seed = o.seed ? std::to_string(*o.seed) : "";

    std::string kpath = kernel_out.empty() ? input + ".kernel" : kernel_out;
    std::string tpath = trace_out.empty() ? input + ".trace" : trace_out;
    ReductionTrace trace;

    auto t0 = Clock::now();
    if (o.weighted) {
        WeightedGraph g = load_weighted_graph(input);
        row.parse_ms = ms_since(t0);
        if (o.seed) g = permute_graph(g, *o.seed);
        row.n = g.vertex_count();
        row.m = g.edge_count();
        row.fes = g.graph().feedback_edge_number();

        auto t1 = Clock::now();
        WeightedReduction red = weighted_kernel_pipeline(
            g, o.mode == "prescribed" ? PipelineMode::prescribed : PipelineMode::exhaustive);
        row.reduce_ms = ms_since(t1);
        row.kernel_n = red.kernel.vertex_count();
        row.kernel_m = red.kernel.edge_count();
        trace = std::move(red.trace);

        auto kf = open_or_die(kpath);
        if (o.format == "dimacs")
            write_dimacs(red.kernel, kf);
        else
            write_edge_list(red.kernel, kf);
    } else {
        Graph g = load_graph(input);
        row.parse_ms = ms_since(t0);
        if (o.seed) g = permute_graph(g, *o.seed);
        row.n = g.vertex_count();
        row.m = g.edge_count();
        row.fes = g.feedback_edge_number();

        auto t1 = Clock::now();
        UnweightedReduction red = reduce_unweighted_by(g, o.rules);
        row.reduce_ms = ms_since(t1);
        row.kernel_n = red.kernel.vertex_count();
        row.kernel_m = red.kernel.edge_count();
        trace = std::move(red.trace);

        auto kf = open_or_die(kpath);
        if (o.format == "dimacs")
            write_dimacs(red.kernel, kf);
        else
            write_edge_list(red.kernel, kf);
    }
    row.card_offset = trace.cardinality_offset();
    row.weight_offset = trace.weight_offset();
    row.counts = count_events(trace);

    auto tf = open_or_die(tpath);
    trace.serialize(tf);

    emit_report(o.out_path, row);
    return 0;
}

// ----------------------------------------------------------------- solve

int cmd_solve(const std::string& input, const CommonOpts& o, const std::string& matching_out,
              const std::string& export_pm, const std::string& from_kernel,
              const std::string& from_trace) {
    std::string mpath = matching_out.empty() ? input + ".matching" : matching_out;
    bool split = !from_kernel.empty() || !from_trace.empty();
    if (split && (from_kernel.empty() || from_trace.empty()))
        throw parse_error(0, "--from-kernel and --from-trace must be given together");

    ReportRow row;
    row.input = input;
    row.kind = o.weighted ? "weighted" : "unweighted";
    row.pipeline = split ? "precomputed" : (o.weighted ? o.mode : o.rules);

    // A prior `reduce` run can hand over its kernel and trace; the lift
    // replays the trace against the original input and cross-checks that
    // it reproduces the supplied kernel.
    auto load_trace = [&]() {
        std::ifstream tf(from_trace);
        if (!tf) throw parse_error(0, "cannot open " + from_trace);
        return ReductionTrace::deserialize(tf);
    };

    auto t0 = Clock::now();
    if (o.weighted) {
        WeightedGraph g = load_weighted_graph(input);
        row.parse_ms = ms_since(t0);
        row.n = g.vertex_count();
        row.m = g.edge_count();
        row.fes = g.graph().feedback_edge_number();

        auto t1 = Clock::now();
        WeightedReduction red;
        if (split) {
            red.kernel = load_weighted_graph(from_kernel);
            red.trace = load_trace();
            WeightedGraph replayed = g;
            red.trace.replay(replayed);
            if (replayed.graph().adjacency() != red.kernel.graph().adjacency() ||
                replayed.weights() != red.kernel.weights())
                throw validation_error("trace replay does not reproduce the supplied kernel");
        } else {
            red = weighted_kernel_pipeline(
                g, o.mode == "prescribed" ? PipelineMode::prescribed : PipelineMode::exhaustive);
        }
        row.reduce_ms = ms_since(t1);
        row.kernel_n = red.kernel.vertex_count();
        row.kernel_m = red.kernel.edge_count();
        row.card_offset = red.trace.cardinality_offset();
        row.weight_offset = red.trace.weight_offset();
        row.counts = count_events(red.trace);

        if (red.kernel.vertex_count() > 18) {
            if (!export_pm.empty()) {
                PerfectMatchingExport exp = export_perfect_matching_instance(red.kernel);
                auto ef = open_or_die(export_pm);
                ef << "# doubled perfect-matching instance of the kernel\n";
                for (const auto& [v, c] : exp.copy_of) ef << "# copy " << v << " " << c << "\n";
                write_edge_list(exp.instance, ef);
                std::cerr << "kernel has " << red.kernel.vertex_count()
                          << " vertices; exact in-process solving is guarded at 18.\n"
                          << "Doubled instance written to " << export_pm
                          << "; solve it with a weighted perfect-matching solver.\n";
                return 0;
            }
            std::cerr << "kernel has " << red.kernel.vertex_count()
                      << " vertices; exact in-process solving is guarded at 18.\n"
                      << "Pass --export-pm FILE to emit a doubled perfect-matching instance.\n";
            return 1;
        }

        auto t2 = Clock::now();
        MwmResult kern = brute_force_mwm(red.kernel);
        row.solve_ms = ms_since(t2);
        auto t3 = Clock::now();
        Matching lifted = lift_matching_weighted(g, red.trace, kern.witness);
        row.lift_ms = ms_since(t3);
        lifted.validate_against(g.graph());

        auto mf = open_or_die(mpath);
        mf << "# matching size " << lifted.size() << " weight " << lifted.total_weight(g) << "\n";
        for (const auto& [a, b] : lifted.edges()) mf << a << " " << b << " " << g.weight(a, b) << "\n";
    } else {
        Graph g = load_graph(input);
        row.parse_ms = ms_since(t0);
        row.n = g.vertex_count();
        row.m = g.edge_count();
        row.fes = g.feedback_edge_number();

        auto t1 = Clock::now();
        UnweightedReduction red;
        if (split) {
            red.kernel = load_graph(from_kernel);
            red.trace = load_trace();
            Graph replayed = g;
            red.trace.replay(replayed);
            if (replayed.adjacency() != red.kernel.adjacency())
                throw validation_error("trace replay does not reproduce the supplied kernel");
        } else {
            red = reduce_unweighted_by(g, o.rules);
        }
        row.reduce_ms = ms_since(t1);
        row.kernel_n = red.kernel.vertex_count();
        row.kernel_m = red.kernel.edge_count();
        row.card_offset = red.trace.cardinality_offset();
        row.counts = count_events(red.trace);

        auto t2 = Clock::now();
        Matching kern = blossom_mcm(red.kernel);
        row.solve_ms = ms_since(t2);
        auto t3 = Clock::now();
        Matching lifted = lift_matching_unweighted(g, red.trace, kern);
        row.lift_ms = ms_since(t3);
        lifted.validate_against(g);

        auto mf = open_or_die(mpath);
        mf << "# matching size " << lifted.size() << "\n";
        for (const auto& [a, b] : lifted.edges()) mf << a << " " << b << "\n";
    }

    emit_report(o.out_path, row);
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& input, std::size_t trials, std::size_t max_n, bool weighted,
               std::uint64_t seed, bool inject) {
    verify::SuiteOptions opt;
    opt.trials = trials;
    opt.max_n = max_n;
    opt.weighted = weighted;
    opt.seed = seed;
    opt.inject_failure = inject;

    std::size_t failures = 0;

    if (!input.empty()) {
        if (weighted) {
            WeightedGraph g = load_weighted_graph(input);
            if (g.vertex_count() <= 12) {
                auto r1 = verify::check_weighted_instance(g, PipelineMode::exhaustive);
                auto r2 = verify::check_weighted_instance(g, PipelineMode::prescribed);
                for (const auto& r : {r1, r2}) {
                    if (!r.ok) {
                        ++failures;
                        std::cout << "FAIL input " << input << ": " << r.detail << "\n";
                    }
                }
                if (r1.ok && r2.ok) std::cout << "input " << input << ": ok\n";
            } else {
                std::cout << "input " << input << ": too large for oracle checks, skipped\n";
            }
        } else {
            Graph g = load_graph(input);
            UnweightedReduction deg = apply_degree_rules_exhaustive(g);
            UnweightedReduction all = crown_kernelize(g);
            std::size_t crown_removed = 0;
            for (const auto& ev : all.trace.events())
                if (const auto* lp = std::get_if<LpRemove>(&ev))
                    crown_removed += lp->ones.size() + lp->zeros.size();
            std::cout << "input " << input << ": n=" << g.vertex_count()
                      << " m=" << g.edge_count() << " degree-kernel=" << deg.kernel.vertex_count()
                      << " full-kernel=" << all.kernel.vertex_count()
                      << " crown-pass-removed=" << crown_removed << "\n";
            if (g.vertex_count() <= 14) {
                auto r1 = verify::check_unweighted_instance(g, false);
                auto r2 = verify::check_unweighted_instance(g, true);
                auto r3 = verify::check_crown_equivalence(g);
                for (const auto& r : {r1, r2, r3}) {
                    if (!r.ok) {
                        ++failures;
                        std::cout << "FAIL input " << input << ": " << r.detail << "\n";
                    }
                }
                if (!failures) std::cout << "input " << input << ": ok\n";
            }
        }
    }

    verify::SuiteReport rep = verify::run_verify_suite(opt);
    failures += rep.failures;
    for (const auto& msg : rep.messages) std::cout << "FAIL " << msg << "\n";
    std::cout << (failures ? "FAIL" : "PASS") << " verify: " << rep.checks << " checks, "
              << failures << " failures (trials=" << trials << ", max-n=" << max_n
              << (weighted ? ", weighted" : "") << ")\n";
    return failures ? 3 : 0;
}

// ----------------------------------------------------------------- stats

std::vector<std::string> stats_row_unweighted(const std::string& input) {
    Graph g = load_graph(input);
    UnweightedReduction deg = apply_degree_rules_exhaustive(g);
    UnweightedReduction all = crown_kernelize(g);
    auto s = [](auto v) { return std::to_string(v); };
    std::size_t k = g.feedback_edge_number();
    std::string tau, two_tau;
    if (g.vertex_count() <= 20) {
        std::size_t t = brute_force_vc(g);
        tau = s(t);
        two_tau = s(2 * t);
    }
    return {input,
            s(g.vertex_count()),
            s(g.edge_count()),
            s(k),
            s(2 * k),
            s(3 * k),
            s(deg.kernel.vertex_count()),
            s(deg.kernel.edge_count()),
            s(deg.trace.cardinality_offset()),
            s(all.kernel.vertex_count()),
            s(all.kernel.edge_count()),
            s(all.trace.cardinality_offset()),
            tau,
            two_tau};
}

std::vector<std::string> stats_row_weighted(const std::string& input) {
    WeightedGraph g = load_weighted_graph(input);
    WeightedReduction pre = weighted_kernel_pipeline(g, PipelineMode::prescribed);
    WeightedReduction exh = weighted_kernel_pipeline(g, PipelineMode::exhaustive);
    auto s = [](auto v) { return std::to_string(v); };
    std::size_t k = g.graph().feedback_edge_number();
    return {input,
            s(g.vertex_count()),
            s(g.edge_count()),
            s(k),
            s(7 * k),
            s(9 * k),
            s(pre.kernel.vertex_count()),
            s(pre.kernel.edge_count()),
            s(pre.trace.weight_offset()),
            s(exh.kernel.vertex_count()),
            s(exh.kernel.edge_count()),
            s(exh.trace.weight_offset())};
}

int cmd_stats(const std::vector<std::string>& inputs, bool weighted, const std::string& out_path) {
    std::ofstream file;
    if (!out_path.empty()) file = open_or_die(out_path);
    CsvWriter csv{out_path.empty() ? &std::cout : &file};
    if (weighted) {
        csv.row({"input", "n", "m", "fes", "bound_7k", "bound_9k", "prescribed_n", "prescribed_m",
                 "prescribed_offset", "exhaustive_n", "exhaustive_m", "exhaustive_offset"});
    } else {
        csv.row({"input", "n", "m", "fes", "bound_2k", "bound_3k", "degree_n", "degree_m",
                 "degree_offset", "full_n", "full_m", "full_offset", "tau", "two_tau"});
    }
    // One worker per file, results merged in input order.
    std::vector<std::future<std::vector<std::string>>> workers;
    workers.reserve(inputs.size());
    for (const auto& input : inputs)
        workers.push_back(std::async(std::launch::async, [&, input] {
            return weighted ? stats_row_weighted(input) : stats_row_unweighted(input);
        }));
    for (auto& w : workers) csv.row(w.get());
    return 0;
}

// ----------------------------------------------------------------- bench

int cmd_bench(const std::vector<std::string>& inputs, std::size_t reps, std::uint64_t seed_base,
              const CommonOpts& o) {
    std::ofstream file;
    if (!o.out_path.empty()) file = open_or_die(o.out_path);
    CsvWriter csv{o.out_path.empty() ? &std::cout : &file};
    csv.row({"input", "row", "seed", "n", "m", "kernel_n", "kernel_m", "reduce_ms",
             "kernel_io_ms", "kernel_solve_ms", "direct_solve_ms", "reduced_total_ms"});

    auto s = [](auto v) { return std::to_string(v); };
    for (const auto& input : inputs) {
        std::vector<double> t_reduce, t_io, t_solve, t_direct, t_total;
        std::size_t kn = 0, km = 0, n = 0, m = 0;
        for (std::size_t rep = 0; rep < reps; ++rep) {
            std::uint64_t seed = seed_base + rep;
            if (o.weighted) {
                WeightedGraph g = permute_graph(load_weighted_graph(input), seed);
                n = g.vertex_count();
                m = g.edge_count();
                auto t1 = Clock::now();
                WeightedReduction red = weighted_kernel_pipeline(
                    g, o.mode == "prescribed" ? PipelineMode::prescribed
                                              : PipelineMode::exhaustive);
                double reduce_ms = ms_since(t1);
                auto t2 = Clock::now();
                std::stringstream buf;
                write_edge_list(red.kernel, buf);
                WeightedGraph back = parse_weighted_edge_list(buf);
                double io_ms = ms_since(t2);
                kn = back.vertex_count();
                km = back.edge_count();
                t_reduce.push_back(reduce_ms);
                t_io.push_back(io_ms);
                t_total.push_back(reduce_ms + io_ms);
                csv.row({input, s(rep), s(seed), s(n), s(m), s(kn), s(km), fmt(reduce_ms),
                         fmt(io_ms), "", "", fmt(reduce_ms + io_ms)});
            } else {
                Graph g = permute_graph(load_graph(input), seed);
                n = g.vertex_count();
                m = g.edge_count();
                auto t0 = Clock::now();
                Matching direct = blossom_mcm(g);
                double direct_ms = ms_since(t0);
                (void)direct;
                auto t1 = Clock::now();
                UnweightedReduction red = reduce_unweighted_by(g, o.rules);
                double reduce_ms = ms_since(t1);
                auto t2 = Clock::now();
                std::stringstream buf;
                write_edge_list(red.kernel, buf);
                Graph back = parse_edge_list(buf);
                double io_ms = ms_since(t2);
                auto t3 = Clock::now();
                Matching kern = blossom_mcm(back);
                double solve_ms = ms_since(t3);
                (void)kern;
                kn = back.vertex_count();
                km = back.edge_count();
                double total = reduce_ms + io_ms + solve_ms;
                t_reduce.push_back(reduce_ms);
                t_io.push_back(io_ms);
                t_solve.push_back(solve_ms);
                t_direct.push_back(direct_ms);
                t_total.push_back(total);
                csv.row({input, s(rep), s(seed), s(n), s(m), s(kn), s(km), fmt(reduce_ms),
                         fmt(io_ms), fmt(solve_ms), fmt(direct_ms), fmt(total)});
            }
        }
        auto aggregate = [&](const char* name, auto pick) {
            auto stat = [&](std::vector<double> v) -> std::string {
                if (v.empty()) return "";
                return fmt(pick(std::move(v)));
            };
            csv.row({input, name, "", s(n), s(m), s(kn), s(km), stat(t_reduce), stat(t_io),
                     stat(t_solve), stat(t_direct), stat(t_total)});
        };
        aggregate("mean", [](std::vector<double> v) {
            double sum = 0;
            for (double x : v) sum += x;
            return sum / static_cast<double>(v.size());
        });
        aggregate("median", [](std::vector<double> v) {
            std::sort(v.begin(), v.end());
            std::size_t mid = v.size() / 2;
            return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
        });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernelization for maximum-cardinality and maximum-weight matching"};
    app.require_subcommand(1);

    // reduce
    CommonOpts ro;
    std::string r_input, r_kernel_out, r_trace_out;
    auto* reduce = app.add_subcommand("reduce", "shrink a graph, write kernel and trace");
    reduce->add_option("input", r_input, "edge-list file")->required();
    add_common(reduce, ro);
    reduce->add_option("--kernel-out", r_kernel_out, "kernel path (default: INPUT.kernel)");
    reduce->add_option("--trace-out", r_trace_out, "trace path (default: INPUT.trace)");
    reduce->add_option("--format", ro.format, "kernel format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));

    // solve
    CommonOpts so;
    std::string s_input, s_matching_out, s_export, s_from_kernel, s_from_trace;
    auto* solve = app.add_subcommand("solve", "reduce, solve the kernel, lift the matching");
    solve->add_option("input", s_input, "edge-list file")->required();
    add_common(solve, so, /*with_seed=*/false);
    solve->add_option("--matching-out", s_matching_out, "matching path (default: INPUT.matching)");
    solve->add_option("--export-pm", s_export,
                      "for large weighted kernels: write a doubled perfect-matching instance");
    solve->add_option("--from-kernel", s_from_kernel,
                      "skip reducing: use this kernel from an earlier reduce run");
    solve->add_option("--from-trace", s_from_trace, "trace belonging to --from-kernel");

    // verify
    std::string v_input;
    std::size_t v_trials = 200, v_max_n = 12;
    bool v_weighted = false, v_inject = false;
    std::uint64_t v_seed = 20240601;
    auto* verify_cmd = app.add_subcommand("verify", "run randomized oracle equivalence suites");
    verify_cmd->add_option("input", v_input, "optional graph to check directly");
    verify_cmd->add_option("--trials", v_trials, "number of random instances");
    verify_cmd->add_option("--max-n", v_max_n, "largest instance size");
    verify_cmd->add_flag("--weighted", v_weighted, "run the weighted suite");
    verify_cmd->add_option("--seed", v_seed, "RNG seed");
    verify_cmd->add_flag("--inject-failure", v_inject,
                         "negative control: force one failing check");

    // stats
    std::vector<std::string> st_inputs;
    bool st_weighted = false;
    std::string st_out;
    auto* stats = app.add_subcommand("stats", "kernel sizes and bounds per input, as CSV");
    stats->add_option("inputs", st_inputs, "edge-list files")->required();
    stats->add_flag("--weighted", st_weighted, "inputs are weighted");
    stats->add_option("--out", st_out, "CSV destination");

    // bench
    CommonOpts bo;
    std::vector<std::string> b_inputs;
    std::size_t b_reps = 3;
    std::uint64_t b_seed_base = 1;
    auto* bench = app.add_subcommand("bench", "timing rows over random vertex permutations");
    bench->add_option("inputs", b_inputs, "edge-list files")->required();
    bench->add_option("--reps", b_reps, "permutations per input");
    bench->add_option("--seed-base", b_seed_base, "first permutation seed");
    add_common(bench, bo, /*with_seed=*/false);

    try {
        app.parse(argc, argv);
        if (*reduce) return cmd_reduce(r_input, ro, r_kernel_out, r_trace_out);
        if (*solve)
            return cmd_solve(s_input, so, s_matching_out, s_export, s_from_kernel, s_from_trace);
        if (*verify_cmd)
            return cmd_verify(v_input, v_trials, v_max_n, v_weighted, v_seed, v_inject);
        if (*stats) return cmd_stats(st_inputs, st_weighted, st_out);
        if (*bench) return cmd_bench(b_inputs, b_reps, b_seed_base, bo);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
