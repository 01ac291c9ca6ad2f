// Acceptance suite: one pass/fail line per criterion, non-zero exit when any
// criterion fails. Tolerances and thresholds are fixed here, in code.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "evo/ea.hpp"
#include "evo/graph.hpp"
#include "evo/harness.hpp"
#include "evo/parallel.hpp"
#include "evo/problem.hpp"
#include "oracles.hpp"

using namespace evo;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += (ok ? "" : "FAILED: ") + what;
    }
};

std::string fmt(double v, int precision = 3) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
    return buf;
}

struct Audit { // fed by criteria 1-6, checked as criterion 7
    bool scaling_monotone = true;
    bool scaling_darwin_ls_zero = true;
    bool one_plus_one_accounting = true;
    bool ea_convergence_monotone = true;
    bool ea_eval_accounting = true;
    bool darwin_ls_counters_zero = true;

    void absorb_scaling(const ScalingReport& report) {
        scaling_monotone = scaling_monotone && report.all_monotone;
        for (const auto& run : report.runs) {
            if (run.evolution == EvolutionKind::Darwinian) {
                scaling_darwin_ls_zero = scaling_darwin_ls_zero && run.ls_iterations == 0 &&
                                         run.neighbor_evals == 0;
            }
        }
    }

    void absorb_run(const EAConfig& cfg, const RunRecord& rec) {
        for (std::size_t i = 1; i < rec.convergence.size(); ++i) {
            ea_convergence_monotone = ea_convergence_monotone &&
                                      rec.convergence[i].second >= rec.convergence[i - 1].second;
        }
        ea_eval_accounting = ea_eval_accounting &&
                             rec.counters.offspring_evals == cfg.mu + rec.generations * cfg.lambda;
        if (cfg.evolution.kind == EvolutionKind::Darwinian) {
            darwin_ls_counters_zero = darwin_ls_counters_zero &&
                                      rec.counters.ls_neighbor_evals == 0 &&
                                      rec.counters.ls_iterations == 0;
        }
    }
};

Audit audit;
unsigned threads = 1;

const ScalingSeries& series_of(const ScalingReport& report, EvolutionKind kind) {
    for (const auto& s : report.series) {
        if (s.evolution == kind) {
            return s;
        }
    }
    throw std::logic_error("missing series");
}

// --- criterion 1: fitted ln-ln slopes at k=2 match the expected exponents ---

Criterion criterion1() {
    Criterion c;
    const auto report = dlb_scaling_experiment(2, {32, 64, 128}, 50,
                                               {EvolutionKind::Darwinian, EvolutionKind::Lamarckian,
                                                EvolutionKind::Baldwinian},
                                               20260101, 1000000000ULL, threads);
    audit.absorb_scaling(report);
    c.require(report.all_success, "all runs reached the optimum");

    const struct {
        EvolutionKind kind;
        double lo, hi;
    } bands[] = {
        {EvolutionKind::Darwinian, 2.5, 3.5},
        {EvolutionKind::Lamarckian, 1.5, 2.5},
        {EvolutionKind::Baldwinian, 1.5, 2.5},
    };
    for (const auto& band : bands) {
        const auto& s = series_of(report, band.kind);
        c.require(s.slope >= band.lo && s.slope <= band.hi,
                  std::string(kind_name(band.kind)) + " slope " + fmt(s.slope) + " in [" +
                      fmt(band.lo, 1) + ", " + fmt(band.hi, 1) + "]");
    }
    return c;
}

// --- criterion 2: iteration-count hierarchy at k=3, n=30 -------------------

Criterion criterion2() {
    Criterion c;
    const auto report = dlb_scaling_experiment(3, {30}, 30,
                                               {EvolutionKind::Darwinian, EvolutionKind::Lamarckian,
                                                EvolutionKind::Baldwinian},
                                               20260202, 1000000000ULL, threads);
    audit.absorb_scaling(report);
    c.require(report.all_success, "all runs reached the optimum");

    const auto& darwin = series_of(report, EvolutionKind::Darwinian).points.at(0);
    const auto& lamarck = series_of(report, EvolutionKind::Lamarckian).points.at(0);
    const auto& baldwin = series_of(report, EvolutionKind::Baldwinian).points.at(0);

    const auto gap_ok = [](const ScalingPoint& lo, const ScalingPoint& hi) {
        const double se = std::sqrt(lo.stderr_iterations * lo.stderr_iterations +
                                    hi.stderr_iterations * hi.stderr_iterations);
        return hi.mean_iterations - lo.mean_iterations > 2.0 * se;
    };
    c.require(gap_ok(baldwin, lamarck), "baldwinian (" + fmt(baldwin.mean_iterations, 1) +
                                            ") < lamarckian (" + fmt(lamarck.mean_iterations, 1) +
                                            ") by > 2 se");
    c.require(gap_ok(lamarck, darwin), "lamarckian (" + fmt(lamarck.mean_iterations, 1) +
                                           ") < darwinian (" + fmt(darwin.mean_iterations, 1) +
                                           ") by > 2 se");
    return c;
}

// --- criterion 3: empirical mean matches the exact 16-state chain ----------

Criterion criterion3() {
    Criterion c;
    const double exact = oracle::exact_one_plus_one_mean_iterations(4, 2, EvolutionKind::Darwinian);
    const DlbProblem problem(4, 2);
    const int runs = 10000;
    std::vector<double> iterations(runs);
    bool counters_ok = true;
    std::vector<char> ok(runs, 1);
    parallel_for(runs, threads, [&](std::size_t r) {
        const auto res = run_one_plus_one(problem, EvolutionKind::Darwinian,
                                          derive_seed(20260303, r), 1000000000ULL);
        iterations[r] = static_cast<double>(res.iterations);
        ok[r] = res.success && res.fitness_monotone &&
                res.counters.offspring_evals == res.iterations + 1 &&
                res.counters.ls_iterations == 0 && res.counters.ls_neighbor_evals == 0;
    });
    for (char o : ok) {
        counters_ok = counters_ok && o != 0;
    }
    audit.one_plus_one_accounting = audit.one_plus_one_accounting && counters_ok;

    double sum = 0.0, sumsq = 0.0;
    for (double it : iterations) {
        sum += it;
        sumsq += it * it;
    }
    const double mean = sum / runs;
    const double var = (sumsq - runs * mean * mean) / (runs - 1);
    const double se = std::sqrt(var / runs);
    c.require(counters_ok, "every run succeeded with darwinian accounting");
    c.require(std::abs(mean - exact) <= 3.0 * se,
              "empirical mean " + fmt(mean) + " vs exact " + fmt(exact) + " within 3 se (se " +
                  fmt(se) + ")");
    return c;
}

// --- criterion 4: local-search correctness properties -----------------------

Criterion criterion4() {
    Criterion c;

    std::vector<std::shared_ptr<const Graph>> fixed = {
        std::make_shared<const Graph>(
            Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}})),
        std::make_shared<const Graph>(Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}})),
        std::make_shared<const Graph>(Graph::gen_er(8, 0.35, 11)),
        std::make_shared<const Graph>(Graph::gen_ba(10, 2, 4)),
        std::make_shared<const Graph>(Graph::gen_er(12, 0.25, 19)),
    };

    bool repair_ok = true;
    bool flip_ok = true;
    Rng rng(20260404);
    for (const auto& g : fixed) {
        const MisProblem mis(g);
        const McProblem mc(g);
        const std::size_t n = g->num_vertices();
        for (std::uint64_t idx = 0; idx < (1ULL << n); ++idx) {
            const BitString x = oracle::bits_from_index(n, idx);
            const auto [rep, steps] = mis.repair(x, rng);
            repair_ok = repair_ok && g->internal_edges(rep) == 0;
            const auto [cut, csteps] = mc.local_search(x, rng);
            const double fy = mc.evaluate(cut);
            BitString z = cut;
            for (std::size_t i = 0; i < n; ++i) {
                z.flip(i);
                flip_ok = flip_ok && mc.evaluate(z) <= fy;
                z.flip(i);
            }
        }
    }
    c.require(repair_ok, "repair output independent, exhaustive on 5 fixed graphs (n <= 12)");
    c.require(flip_ok, "cut output 1-flip optimal, exhaustive on 5 fixed graphs");

    bool rand_repair_ok = true;
    bool rand_flip_ok = true;
    const int pairs = 10000;
    const int per_graph = 20;
    for (int b = 0; b < pairs / per_graph; ++b) {
        const Vertex n = static_cast<Vertex>(6 + (b % 35));
        const double p = 0.05 + 0.4 * static_cast<double>(b % 7) / 6.0;
        const auto g = std::make_shared<const Graph>(
            Graph::gen_er(n, p, 900000 + static_cast<std::uint64_t>(b)));
        const MisProblem mis(g);
        const McProblem mc(g);
        for (int j = 0; j < per_graph; ++j) {
            const BitString x = BitString::random(n, rng);
            const auto [rep, steps] = mis.repair(x, rng);
            rand_repair_ok = rand_repair_ok && g->internal_edges(rep) == 0 && steps <= x.popcount();
            const auto [cut, csteps] = mc.local_search(x, rng);
            const double fy = mc.evaluate(cut);
            BitString z = cut;
            for (std::size_t i = 0; i < n; ++i) {
                z.flip(i);
                rand_flip_ok = rand_flip_ok && mc.evaluate(z) <= fy;
                z.flip(i);
            }
        }
    }
    c.require(rand_repair_ok, "repair output independent on 10000 random (graph, x) pairs");
    c.require(rand_flip_ok, "cut output 1-flip optimal on 10000 random pairs");

    bool fixed_points_ok = true;
    for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{8, 2}, {9, 3}}) {
        const DlbProblem p(n, k);
        for (std::uint64_t idx = 0; idx < (1ULL << n); ++idx) {
            const BitString x = oracle::bits_from_index(n, idx);
            const LsResult ls = hillclimb(p, x, rng);
            fixed_points_ok =
                fixed_points_ok && (ls.ls_iterations == 0) == oracle::is_local_max_dlb(x, k);
        }
    }
    c.require(fixed_points_ok,
              "hillclimb fixed points = brute-force local maxima (n=8 k=2; n=9 k=3)");
    return c;
}

// --- criterion 5: local search beats darwinian evolution on MIS -------------

Criterion criterion5() {
    Criterion c;
    const int num_graphs = 20;
    const std::vector<std::uint64_t> seeds{0, 1, 2};

    std::vector<std::shared_ptr<const Graph>> graphs;
    for (int i = 0; i < num_graphs; ++i) {
        graphs.push_back(std::make_shared<const Graph>(
            Graph::gen_er(200, 0.05, static_cast<std::uint64_t>(i))));
    }

    struct TypeSetup {
        EvolutionType evolution;
        std::size_t mu, lambda;
        double rc;
    };
    const TypeSetup setups[] = {
        {EvolutionType::darwinian(), 50, 250, 1.0},
        {EvolutionType::baldwinian(), 250, 50, 0.9},
        {EvolutionType::lamarckian(), 10, 10, 0.0},
        {EvolutionType::lb(0.15), 250, 250, 1.0},
    };

    double means[4] = {0, 0, 0, 0};
    for (int t = 0; t < 4; ++t) {
        const TypeSetup& setup = setups[t];
        const std::size_t runs = graphs.size() * seeds.size();
        std::vector<double> best(runs);
        std::vector<std::pair<EAConfig, RunRecord>> records(runs);
        parallel_for(runs, threads, [&](std::size_t idx) {
            const std::size_t graph_idx = idx / seeds.size();
            const std::uint64_t seed = seeds[idx % seeds.size()];
            EAConfig cfg;
            cfg.mu = setup.mu;
            cfg.lambda = setup.lambda;
            cfg.crossover_rate = setup.rc;
            cfg.evolution = setup.evolution;
            cfg.budget = 40000;
            cfg.seed = derive_seed(seed, graph_idx);
            const MisProblem problem(graphs[graph_idx]);
            const RunRecord rec = run_mu_plus_lambda(cfg, problem);
            best[idx] = rec.best_fitness;
            records[idx] = {cfg, rec};
        });
        for (const auto& [cfg, rec] : records) {
            audit.absorb_run(cfg, rec);
        }
        double sum = 0.0;
        for (double b : best) {
            sum += b;
        }
        means[t] = sum / static_cast<double>(runs);
    }

    c.require(means[1] > means[0], "baldwinian mean " + fmt(means[1]) + " > darwinian mean " +
                                       fmt(means[0]));
    c.require(means[2] > means[0], "lamarckian mean " + fmt(means[2]) + " > darwinian mean " +
                                       fmt(means[0]));
    c.require(means[3] > means[0],
              "lb mean " + fmt(means[3]) + " > darwinian mean " + fmt(means[0]));
    return c;
}

// --- criterion 6: LB degenerate probabilities equal the pure types ----------

Criterion criterion6() {
    Criterion c;
    const auto graph = std::make_shared<const Graph>(Graph::gen_er(100, 0.05, 42));
    const MisProblem problem(graph);

    const auto run_type = [&](EvolutionType evolution, std::uint64_t seed) {
        EAConfig cfg;
        cfg.mu = 50;
        cfg.lambda = 25;
        cfg.crossover_rate = 0.9;
        cfg.evolution = evolution;
        cfg.budget = 5000;
        cfg.seed = seed;
        const RunRecord rec = run_mu_plus_lambda(cfg, problem);
        audit.absorb_run(cfg, rec);
        return rec;
    };

    const auto traces_equal = [](const RunRecord& a, const RunRecord& b) {
        return a.best_fitness == b.best_fitness && a.best_genotype == b.best_genotype &&
               a.convergence == b.convergence && a.diversity == b.diversity &&
               a.generations == b.generations &&
               a.counters.offspring_evals == b.counters.offspring_evals &&
               a.counters.ls_neighbor_evals == b.counters.ls_neighbor_evals &&
               a.counters.ls_iterations == b.counters.ls_iterations;
    };

    bool lb0_ok = true;
    bool lb1_ok = true;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        lb0_ok = lb0_ok && traces_equal(run_type(EvolutionType::lb(0.0), seed),
                                        run_type(EvolutionType::baldwinian(), seed));
        const RunRecord lb1 = run_type(EvolutionType::lb(1.0), seed);
        const RunRecord lam = run_type(EvolutionType::lamarckian(), seed);
        lb1_ok = lb1_ok && traces_equal(lb1, lam) && lb1.unique_optima == lam.unique_optima;
    }
    c.require(lb0_ok, "lb(0) traces bit-identical to baldwinian over 10 seeds");
    c.require(lb1_ok, "lb(1) traces bit-identical to lamarckian over 10 seeds");
    return c;
}

// --- criterion 7: elitism and accounting invariants across criteria 1-6 -----

Criterion criterion7() {
    Criterion c;
    c.require(audit.scaling_monotone, "(1+1) EA stored fitness never decreased");
    c.require(audit.scaling_darwin_ls_zero, "darwinian (1+1) runs had zero ls counters");
    c.require(audit.one_plus_one_accounting, "(1+1) offspring_evals = iterations + 1");
    c.require(audit.ea_convergence_monotone, "(mu+lambda) best fitness non-decreasing");
    c.require(audit.ea_eval_accounting, "offspring_evals = mu + generations * lambda");
    c.require(audit.darwin_ls_counters_zero, "darwinian (mu+lambda) runs had zero ls counters");
    return c;
}

// --- criterion 8: default grid enumerates 252 configurations ----------------

Criterion criterion8() {
    Criterion c;
    const GridSpec spec;
    const auto cells = enumerate_grid(spec, {EvolutionKind::Darwinian, EvolutionKind::Baldwinian,
                                             EvolutionKind::Lamarckian, EvolutionKind::LB});
    c.require(cells.size() == 252, "default grid has " + std::to_string(cells.size()) +
                                       " configurations (expected 252)");
    return c;
}

// --- criterion 9: fit_exponent is exact on noiseless power laws -------------

Criterion criterion9() {
    Criterion c;
    const std::vector<double> ns{16, 32, 64, 128};
    std::vector<double> sq, cube;
    for (double n : ns) {
        sq.push_back(n * n);
        cube.push_back(n * n * n);
    }
    const FitResult f2 = fit_exponent(ns, sq);
    const FitResult f3 = fit_exponent(ns, cube);
    c.require(std::abs(f2.slope - 2.0) < 1e-9,
              "slope on n^2 within 1e-9 (got " + format_double(f2.slope) + ")");
    c.require(std::abs(f3.slope - 3.0) < 1e-9,
              "slope on n^3 within 1e-9 (got " + format_double(f3.slope) + ")");
    return c;
}

} // namespace

int main() {
    threads = default_thread_count();

    struct Entry {
        int id;
        const char* title;
        Criterion (*fn)();
    };
    const Entry entries[] = {
        {1, "(1+1) EA runtime-scaling slopes, k=2, n in {32,64,128}, 50 reps", criterion1},
        {2, "(1+1) EA runtime hierarchy, k=3, n=30, 30 reps", criterion2},
        {3, "darwinian (1+1) EA mean vs exact 16-state chain, 10000 runs", criterion3},
        {4, "local-search correctness property suite", criterion4},
        {5, "evolution-type ordering on MIS, 20 x ER(200, 0.05), budget 40000", criterion5},
        {6, "LB degenerate-probability trace equivalence", criterion6},
        {7, "elitism and accounting invariants over criteria 1-6", criterion7},
        {8, "grid enumeration count", criterion8},
        {9, "fit_exponent exactness on noiseless power laws", criterion9},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        Criterion result;
        try {
            result = entry.fn();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        failures += result.pass ? 0 : 1;
        std::cout << (result.pass ? "[PASS]" : "[FAIL]") << " criterion " << entry.id << ": "
                  << entry.title << "\n       " << result.detail << "\n";
        std::cout.flush();
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}
