#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "evo/graph.hpp"
#include "evo/harness.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int status = -1;
    std::string output; // stdout and stderr combined
};

std::string cli_path() {
    const char* path = std::getenv("EVO_CLI");
    REQUIRE_MESSAGE(path != nullptr, "EVO_CLI must point at the built binary");
    return path;
}

CmdResult run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
        res.output.append(buf, got);
    }
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("evo_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").status == 0);
    CHECK(run_cli("solve --help").status == 0);
}

TEST_CASE("generate er writes a parseable edge list") {
    const fs::path out = scratch_dir() / "er200.el";
    const CmdResult res =
        run_cli("generate er --n 200 --p 0.05 --seed 1 -o " + out.string());
    CHECK(res.status == 0);
    const evo::Graph g = evo::Graph::read_edge_list(out);
    CHECK(g.num_vertices() == 200);
}

TEST_CASE("generate ba follows the attachment edge-count rule") {
    const fs::path out = scratch_dir() / "ba10.el";
    const CmdResult res = run_cli("generate ba --n 10 --m 2 --seed 1 -o " + out.string());
    CHECK(res.status == 0);
    CHECK(res.output.find("m=17") != std::string::npos);
    CHECK(evo::Graph::read_edge_list(out).num_edges() == 17);
}

TEST_CASE("generate validates parameters") {
    CHECK(run_cli("generate er --n 5 --p 1.5 -o " + (scratch_dir() / "x.el").string()).status !=
          0);
    CHECK(run_cli("generate ba --n 5 --m 9 -o " + (scratch_dir() / "x.el").string()).status != 0);
    CHECK(run_cli("generate ring --n 5 -o " + (scratch_dir() / "x.el").string()).status != 0);
}

TEST_CASE("solve finds the trivial optimum on an edgeless graph") {
    const fs::path graph = scratch_dir() / "empty16.el";
    REQUIRE(run_cli("generate er --n 16 --p 0 --seed 1 -o " + graph.string()).status == 0);
    for (const char* evolution : {"darwinian", "baldwinian", "lamarckian", "lb"}) {
        const CmdResult res = run_cli("solve mis --graph " + graph.string() + " --evolution " +
                                      evolution + " --budget 3000 --seeds 0");
        CHECK(res.status == 0);
        CHECK(res.output.find("best 16") != std::string::npos);
    }
}

TEST_CASE("solve reports the max cut of the triangle") {
    const fs::path graph = scratch_dir() / "triangle.el";
    {
        std::ofstream out(graph);
        out << "n 3 m 3\n0 1\n1 2\n0 2\n";
    }
    const CmdResult res = run_cli("solve mc --graph " + graph.string() +
                                  " --evolution baldwinian --budget 500 --seeds 0,1,2");
    CHECK(res.status == 0);
    CHECK(res.output.find("mean 2 std 0") != std::string::npos);
}

TEST_CASE("solve rejects unknown evolution names") {
    const fs::path graph = scratch_dir() / "empty16.el";
    REQUIRE(run_cli("generate er --n 16 --p 0 --seed 1 -o " + graph.string()).status == 0);
    const CmdResult res =
        run_cli("solve mis --graph " + graph.string() + " --evolution mendelian --seeds 0");
    CHECK(res.status != 0);
    CHECK(res.output.find("unknown evolution type") != std::string::npos);
}

TEST_CASE("solve writes a trace csv when asked") {
    const fs::path graph = scratch_dir() / "er30.el";
    REQUIRE(run_cli("generate er --n 30 --p 0.1 --seed 2 -o " + graph.string()).status == 0);
    const fs::path trace = scratch_dir() / "trace.csv";
    const CmdResult res = run_cli("solve mis --graph " + graph.string() +
                                  " --mu 5 --lambda 5 --budget 50 --seeds 0,1 --trace " +
                                  trace.string());
    CHECK(res.status == 0);
    const std::string contents = slurp(trace);
    CHECK(contents.rfind("seed,offspring_evals,best_fitness,mean_pairwise_hamming\n", 0) == 0);
}

TEST_CASE("dlb-scale prints slopes, writes a reproducible csv, validates n") {
    const fs::path out1 = scratch_dir() / "scale1.csv";
    const fs::path out2 = scratch_dir() / "scale2.csv";
    const std::string common =
        "dlb-scale --k 2 --n 8,12,16 --reps 3 --types darwin,lamarck,baldwin --seed 5 "
        "--threads 2 -o ";
    const CmdResult first = run_cli(common + out1.string());
    CHECK(first.status == 0);
    CHECK(first.output.find("darwinian: slope ") != std::string::npos);
    CHECK(first.output.find("lamarckian: slope ") != std::string::npos);
    CHECK(first.output.find("baldwinian: slope ") != std::string::npos);

    const CmdResult second = run_cli(common + out2.string());
    CHECK(second.status == 0);
    CHECK(slurp(out1) == slurp(out2)); // byte-identical across invocations

    CHECK(evo::read_scaling_csv(out1).size() == 27);

    CHECK(run_cli("dlb-scale --k 2 --n 33 --reps 1 -o " + (scratch_dir() / "bad.csv").string())
              .status != 0);
}

TEST_CASE("grid runs from a config file and honours flag overrides") {
    const fs::path graph = scratch_dir() / "er20.el";
    REQUIRE(run_cli("generate er --n 20 --p 0.15 --seed 3 -o " + graph.string()).status == 0);

    const fs::path config = scratch_dir() / "grid.json";
    {
        std::ofstream out(config);
        out << R"({
  "problem": "mis",
  "graphs": [")" << graph.string()
            << R"("],
  "evolutions": ["darwinian", "lb"],
  "seeds": [0, 1],
  "budget": 100,
  "grid": {"mu": [4], "lambda": [8], "rc": [0.5], "plb": [0.15, 0.9]}
})";
    }
    const fs::path cells = scratch_dir() / "cells.csv";
    const fs::path summary = scratch_dir() / "summary.csv";
    const CmdResult res = run_cli("grid --config " + config.string() + " --out " + cells.string() +
                                  " --summary " + summary.string());
    CHECK(res.status == 0);
    // 1 darwinian cell + 2 lb cells, 1 graph, 2 seeds
    CHECK(evo::read_grid_csv(cells).size() == 6);
    const std::string sum = slurp(summary);
    CHECK(sum.find("darwinian,4,8,") != std::string::npos);
    CHECK(sum.find("lb,4,8,") != std::string::npos);

    CHECK(run_cli("grid --config " + (scratch_dir() / "nope.json").string()).status != 0);
    CHECK(run_cli("grid").status != 0);

    const fs::path empty_cfg = scratch_dir() / "empty_graphs.json";
    {
        std::ofstream out(empty_cfg);
        out << R"({"problem": "mis", "graphs": []})";
    }
    const CmdResult empty_res = run_cli("grid --config " + empty_cfg.string());
    CHECK(empty_res.status != 0);
    CHECK(empty_res.output.find("empty graph list") != std::string::npos);
}

TEST_CASE("grid reports the relative loss of a candidate cell") {
    const fs::path graph = scratch_dir() / "er20b.el";
    REQUIRE(run_cli("generate er --n 20 --p 0.15 --seed 4 -o " + graph.string()).status == 0);
    const fs::path config = scratch_dir() / "grid2.json";
    {
        std::ofstream out(config);
        out << R"({
  "problem": "mc",
  "graphs": [")" << graph.string()
            << R"("],
  "evolutions": ["lamarckian"],
  "seeds": [0],
  "budget": 100,
  "grid": {"mu": [4, 8], "lambda": [4], "rc": [0.5]}
})";
    }
    const CmdResult res = run_cli("grid --config " + config.string() + " --out " +
                                  (scratch_dir() / "c2.csv").string() + " --summary " +
                                  (scratch_dir() / "s2.csv").string() + " --candidate 4,4,0.5");
    CHECK(res.status == 0);
    CHECK(res.output.find("loss lamarckian: ") != std::string::npos);

    const CmdResult bad = run_cli("grid --config " + config.string() + " --out " +
                                  (scratch_dir() / "c3.csv").string() + " --summary " +
                                  (scratch_dir() / "s3.csv").string() + " --candidate 5,4,0.5");
    CHECK(bad.status != 0);
}

TEST_CASE("every run parameter can come from the config file alone") {
    const fs::path graph = scratch_dir() / "cfg_only.el";
    const fs::path gen_cfg = scratch_dir() / "gen.json";
    {
        std::ofstream out(gen_cfg);
        out << R"({"model": "ba", "n": 10, "m": 2, "seed": 1, "out": ")" << graph.string()
            << R"("})";
    }
    CHECK(run_cli("generate --config " + gen_cfg.string()).status == 0);
    CHECK(evo::Graph::read_edge_list(graph).num_edges() == 17);

    const fs::path solve_cfg = scratch_dir() / "solve.json";
    {
        std::ofstream out(solve_cfg);
        out << R"({"problem": "mis", "graph": ")" << graph.string()
            << R"(", "evolution": "lamarckian", "budget": 200, "seeds": "0"})";
    }
    const CmdResult res = run_cli("solve --config " + solve_cfg.string());
    CHECK(res.status == 0);
    CHECK(res.output.find("seed 0: best") != std::string::npos);

    CHECK(run_cli("generate").status != 0); // nothing configured at all
    CHECK(run_cli("solve").status != 0);
}

TEST_CASE("print-config reports resolved values with flags overriding config") {
    const fs::path config = scratch_dir() / "scale.json";
    {
        std::ofstream out(config);
        out << R"({"k": 2, "n": "8,12,16", "reps": 1, "seed": 5, "types": "darwin"})";
    }
    const fs::path out = scratch_dir() / "cfgscale.csv";
    const CmdResult res = run_cli("dlb-scale --config " + config.string() +
                                  " --seed 7 --print-config -o " + out.string());
    CHECK(res.status == 0);
    CHECK(res.output.find("\"seed\": 7") != std::string::npos); // flag wins
    CHECK(res.output.find("\"reps\": 1") != std::string::npos); // config fills the rest
}
