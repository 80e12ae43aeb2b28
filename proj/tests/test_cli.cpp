#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "matchred/io.hpp"
#include "matchred/trace.hpp"

using namespace matchred;
namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "matchred_cli_test";

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    fs::create_directories(kDir);
    fs::path out = kDir / "cmd.out";
    std::string cmd = std::string(MATCHRED_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    return {WEXITSTATUS(rc), buf.str()};
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::create_directories(kDir);
    fs::path p = kDir / name;
    std::ofstream out(p);
    out << content;
    return p;
}

ReductionTrace load_trace(const fs::path& p) {
    std::ifstream in(p);
    return ReductionTrace::deserialize(in);
}

}  // namespace

TEST_CASE("cli reduce writes kernel and trace") {
    fs::path c5 = write_file("c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    auto r = run_cli("reduce " + c5.string() + " --rules degree");
    REQUIRE(r.exit_code == 0);

    std::ifstream kf(c5.string() + ".kernel");
    Graph kernel = parse_edge_list(kf);
    CHECK(kernel.empty());
    CHECK(load_trace(c5.string() + ".trace").cardinality_offset() == 2);
}

TEST_CASE("cli reduce with the crown pipeline") {
    std::ostringstream k35;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 5; ++b) k35 << a << " " << 3 + b << "\n";
    fs::path p = write_file("k35.txt", k35.str());
    auto r = run_cli("reduce " + p.string() + " --rules all");
    REQUIRE(r.exit_code == 0);
    CHECK(load_trace(p.string() + ".trace").cardinality_offset() == 3);
    std::ifstream kf(p.string() + ".kernel");
    CHECK(parse_edge_list(kf).empty());
}

TEST_CASE("cli reduce weighted forest") {
    fs::path p = write_file("forest.txt", "0 1 4\n1 2 2\n3 4 9\n");
    auto r = run_cli("reduce " + p.string() + " --weighted --mode exhaustive");
    REQUIRE(r.exit_code == 0);
    std::ifstream kf(p.string() + ".kernel");
    CHECK(parse_weighted_edge_list(kf).empty());
    CHECK(load_trace(p.string() + ".trace").weight_offset() == 13);
}

TEST_CASE("cli reduce is deterministic under a fixed seed") {
    fs::path p = write_file("seeded.txt", "0 1\n1 2\n2 3\n3 0\n0 2\n4 0\n");
    auto k1 = kDir / "k1", t1 = kDir / "t1", k2 = kDir / "k2", t2 = kDir / "t2";
    REQUIRE(run_cli("reduce " + p.string() + " --seed 7 --kernel-out " + k1.string() +
                    " --trace-out " + t1.string())
                .exit_code == 0);
    REQUIRE(run_cli("reduce " + p.string() + " --seed 7 --kernel-out " + k2.string() +
                    " --trace-out " + t2.string())
                .exit_code == 0);
    auto slurp = [](const fs::path& f) {
        std::ifstream in(f);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    CHECK(slurp(k1) == slurp(k2));
    CHECK(slurp(t1) == slurp(t2));
}

TEST_CASE("cli solve emits the unique optimum of the weighted figure") {
    fs::path p = write_file("fig.txt", "0 1 5\n1 2 6\n1 4 9\n1 3 3\n4 3 4\n");
    auto r = run_cli("solve " + p.string() + " --weighted");
    REQUIRE(r.exit_code == 0);
    std::ifstream mf(p.string() + ".matching");
    std::string header;
    std::getline(mf, header);
    CHECK(header.find("weight 10") != std::string::npos);
    WeightedGraph m = parse_weighted_edge_list(mf);
    CHECK(m.has_edge(1, 2));
    CHECK(m.has_edge(3, 4));
}

TEST_CASE("cli solve on an unweighted cycle") {
    fs::path p = write_file("c5b.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    auto r = run_cli("solve " + p.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream mf(p.string() + ".matching");
    Graph m = parse_edge_list(mf);
    CHECK(m.edge_count() == 2);
}

TEST_CASE("cli stats reports bounds") {
    std::ostringstream k4;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4 << a << " " << b << "\n";
    fs::path p = write_file("k4.txt", k4.str());
    auto r = run_cli("stats " + p.string());
    REQUIRE(r.exit_code == 0);
    // n=4, m=6, k=3, bounds (6,9), degree kernel unchanged (4,6), tau=3
    CHECK(r.output.find("4,6,3,6,9,4,6,0") != std::string::npos);
    CHECK(r.output.find(",3,6") != std::string::npos);
}

TEST_CASE("cli bench produces rows plus aggregates") {
    fs::path p = write_file("bench.txt", "0 1\n1 2\n2 3\n3 0\n0 2\n");
    auto r = run_cli("bench " + p.string() + " --reps 3 --seed-base 5");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::size_t rows = 0, means = 0, medians = 0;
    while (std::getline(lines, line)) {
        if (line.find(",mean,") != std::string::npos) ++means;
        if (line.find(",median,") != std::string::npos) ++medians;
        ++rows;
    }
    CHECK(rows == 1 + 3 + 2);  // header, three reps, two aggregates
    CHECK(means == 1);
    CHECK(medians == 1);
}

TEST_CASE("cli verify passes on small suites and honors the negative control") {
    auto ok = run_cli("verify --trials 8 --max-n 10 --seed 1");
    CHECK(ok.exit_code == 0);
    auto okw = run_cli("verify --trials 5 --max-n 9 --weighted --seed 2");
    CHECK(okw.exit_code == 0);
    auto injected = run_cli("verify --trials 3 --inject-failure");
    CHECK(injected.exit_code == 3);
}

TEST_CASE("cli verify reports crown-pass removals for an input") {
    fs::path p = write_file("c5c.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    auto r = run_cli("verify " + p.string() + " --trials 1 --max-n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("crown-pass-removed=0") != std::string::npos);
}

TEST_CASE("cli reduce and solve split across processes") {
    fs::path p = write_file("split.txt", "0 1 7\n1 2 3\n2 3 5\n3 4 2\n4 0 9\n0 2 4\n");
    fs::path k = kDir / "split.kernel", t = kDir / "split.trace";
    REQUIRE(run_cli("reduce " + p.string() + " --weighted --kernel-out " + k.string() +
                    " --trace-out " + t.string())
                .exit_code == 0);
    auto r = run_cli("solve " + p.string() + " --weighted --from-kernel " + k.string() +
                     " --from-trace " + t.string());
    REQUIRE(r.exit_code == 0);
    std::ifstream mf(p.string() + ".matching");
    std::string header;
    std::getline(mf, header);
    CHECK(header.find("weight 14") != std::string::npos);  // {4-0, 2-3}

    // a foreign trace is rejected
    fs::path other = write_file("split2.txt", "0 1 7\n1 2 3\n");
    REQUIRE(run_cli("reduce " + other.string() + " --weighted").exit_code == 0);
    auto bad = run_cli("solve " + p.string() + " --weighted --from-kernel " + k.string() +
                       " --from-trace " + other.string() + ".trace");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli reduce can emit dimacs kernels") {
    fs::path p = write_file("dim.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    auto r = run_cli("reduce " + p.string() + " --format dimacs");
    REQUIRE(r.exit_code == 0);
    std::ifstream kf(p.string() + ".kernel");
    std::string first;
    std::getline(kf, first);
    CHECK(first == "p edge 4 6");
}

TEST_CASE("cli report rows append to --out") {
    fs::path p = write_file("app.txt", "0 1\n1 2\n");
    fs::path out = kDir / "rows.csv";
    fs::remove(out);
    REQUIRE(run_cli("reduce " + p.string() + " --out " + out.string()).exit_code == 0);
    REQUIRE(run_cli("reduce " + p.string() + " --out " + out.string()).exit_code == 0);
    std::ifstream in(out);
    std::string line;
    std::size_t lines = 0, headers = 0;
    while (std::getline(in, line)) {
        ++lines;
        if (line.rfind("input,", 0) == 0) ++headers;
    }
    CHECK(lines == 3);
    CHECK(headers == 1);
}

TEST_CASE("cli exit codes") {
    fs::path bad = write_file("bad.txt", "not a graph\n");
    CHECK(run_cli("reduce " + bad.string()).exit_code == 2);
    CHECK(run_cli("reduce").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("reduce " + (kDir / "missing.txt").string()).exit_code == 2);
}

TEST_CASE("cli solve refuses oversized weighted kernels without an export path") {
    // K4 core with distinct weights resists every reduction rule; blow it
    // up to a 20-vertex clique so the brute-force guard trips.
    std::ostringstream big;
    int w = 1;
    for (int a = 0; a < 20; ++a)
        for (int b = a + 1; b < 20; ++b) big << a << " " << b << " " << w++ << "\n";
    fs::path p = write_file("big.txt", big.str());
    auto refused = run_cli("solve " + p.string() + " --weighted");
    CHECK(refused.exit_code == 1);
    fs::path exp = kDir / "big.pm";
    auto exported = run_cli("solve " + p.string() + " --weighted --export-pm " + exp.string());
    CHECK(exported.exit_code == 0);
    std::ifstream ef(exp);
    WeightedGraph doubled = parse_weighted_edge_list(ef);
    CHECK(doubled.vertex_count() == 40);
    CHECK(doubled.edge_count() == 2 * 190 + 20);
}
