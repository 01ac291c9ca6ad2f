// Command-line front end: graph generation, single solves, grid search, and
// the deceptive-leading-blocks runtime-scaling experiment.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evo/ea.hpp"
#include "evo/graph.hpp"
#include "evo/harness.hpp"
#include "evo/parallel.hpp"
#include "evo/problem.hpp"

using nlohmann::json;

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            if (start < s.size()) {
                parts.push_back(s.substr(start));
            }
            break;
        }
        if (comma > start) {
            parts.push_back(s.substr(start, comma - start));
        }
        start = comma + 1;
    }
    return parts;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s, const char* what) {
    std::vector<std::uint64_t> out;
    for (const auto& part : split_list(s)) {
        try {
            out.push_back(std::stoull(part));
        } catch (const std::exception&) {
            throw evo::ConfigError(std::string("invalid ") + what + " list entry: " + part);
        }
    }
    if (out.empty()) {
        throw evo::ConfigError(std::string("empty ") + what + " list");
    }
    return out;
}

std::vector<evo::EvolutionKind> parse_kind_list(const std::string& s) {
    std::vector<evo::EvolutionKind> kinds;
    for (const auto& part : split_list(s)) {
        kinds.push_back(evo::EvolutionType::parse_kind(part));
    }
    if (kinds.empty()) {
        throw evo::ConfigError("empty evolution type list");
    }
    return kinds;
}

json load_config(const std::string& path) {
    if (path.empty()) {
        return json::object();
    }
    std::ifstream in(path);
    if (!in) {
        throw evo::IoError("cannot open config file " + path);
    }
    json cfg;
    try {
        in >> cfg;
    } catch (const json::exception& e) {
        throw evo::ConfigError("malformed config " + path + ": " + e.what());
    }
    if (!cfg.is_object()) {
        throw evo::ConfigError("config root must be a JSON object: " + path);
    }
    return cfg;
}

/// Config values fill in flags the user did not pass; explicit flags win.
template <class T>
void overlay(const json& cfg, const char* key, const CLI::App& sub, const std::string& flag,
             T& value) {
    if (sub.count(flag) == 0 && cfg.contains(key)) {
        value = cfg.at(key).get<T>();
    }
}

struct CommonArgs {
    std::string config_path;
    unsigned threads = evo::default_thread_count();
    bool print_config = false;
};

void add_common(CLI::App& sub, CommonArgs& args) {
    sub.add_option("--config", args.config_path, "JSON config file; flags override its values");
    sub.add_option("--threads", args.threads, "Worker thread cap for parallel runs");
    sub.add_flag("--print-config", args.print_config,
                 "Print the fully resolved configuration before running");
}

void maybe_print_config(const CommonArgs& common, const json& resolved) {
    if (common.print_config) {
        std::cout << resolved.dump(2) << "\n";
    }
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    CommonArgs common;
    std::string model;
    std::uint64_t n = 0;
    double p = 0.1;
    std::uint64_t m = 2;
    std::uint64_t seed = 0;
    std::string out = "graph.el";
};

int run_generate(GenerateArgs& a, const CLI::App& sub) {
    const json cfg = load_config(a.common.config_path);
    overlay(cfg, "model", sub, "model", a.model);
    overlay(cfg, "n", sub, "--n", a.n);
    overlay(cfg, "p", sub, "--p", a.p);
    overlay(cfg, "m", sub, "--m", a.m);
    overlay(cfg, "seed", sub, "--seed", a.seed);
    overlay(cfg, "out", sub, "--out", a.out);

    maybe_print_config(a.common, json{{"command", "generate"},
                                      {"model", a.model},
                                      {"n", a.n},
                                      {"p", a.p},
                                      {"m", a.m},
                                      {"seed", a.seed},
                                      {"out", a.out}});

    if (a.model.empty()) {
        throw evo::ConfigError("generate requires a model (er or ba)");
    }
    if (a.n == 0) {
        throw evo::ConfigError("generate requires --n");
    }
    evo::Graph g;
    if (a.model == "er") {
        g = evo::Graph::gen_er(static_cast<evo::Vertex>(a.n), a.p, a.seed);
    } else if (a.model == "ba") {
        g = evo::Graph::gen_ba(static_cast<evo::Vertex>(a.n), static_cast<evo::Vertex>(a.m),
                               a.seed);
    } else {
        throw evo::ConfigError("unknown graph model: " + a.model + " (expected er or ba)");
    }
    g.write_edge_list(std::filesystem::path(a.out));
    std::cout << "wrote " << a.out << ": n=" << g.num_vertices() << " m=" << g.num_edges() << "\n";
    return 0;
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
    CommonArgs common;
    std::string problem;
    std::string graph_path;
    std::string evolution = "baldwinian";
    std::uint64_t mu = 0; // 0: use the per-evolution generalist default
    std::uint64_t lambda = 0;
    double rc = -1.0;
    double plb = -1.0;
    double mutation_rate = 0.0;
    std::uint64_t budget = 40000;
    std::string seeds = "0,1,2";
    std::string trace;
};

/// Cross-problem generalist configurations per evolution type.
void apply_generalist_defaults(evo::EvolutionKind kind, std::uint64_t& mu, std::uint64_t& lambda,
                               double& rc, double& plb) {
    struct Defaults {
        std::uint64_t mu, lambda;
        double rc;
    };
    Defaults d{};
    switch (kind) {
    case evo::EvolutionKind::Darwinian:
        d = {50, 250, 1.0};
        break;
    case evo::EvolutionKind::Baldwinian:
        d = {250, 50, 0.9};
        break;
    case evo::EvolutionKind::Lamarckian:
        d = {10, 10, 0.0};
        break;
    case evo::EvolutionKind::LB:
        d = {250, 250, 1.0};
        break;
    }
    if (mu == 0) {
        mu = d.mu;
    }
    if (lambda == 0) {
        lambda = d.lambda;
    }
    if (rc < 0.0) {
        rc = d.rc;
    }
    if (plb < 0.0) {
        plb = kind == evo::EvolutionKind::LB ? 0.15 : 0.0;
    }
}

int run_solve(SolveArgs& a, const CLI::App& sub) {
    const json cfg = load_config(a.common.config_path);
    overlay(cfg, "problem", sub, "problem", a.problem);
    overlay(cfg, "graph", sub, "--graph", a.graph_path);
    overlay(cfg, "evolution", sub, "--evolution", a.evolution);
    overlay(cfg, "mu", sub, "--mu", a.mu);
    overlay(cfg, "lambda", sub, "--lambda", a.lambda);
    overlay(cfg, "rc", sub, "--rc", a.rc);
    overlay(cfg, "plb", sub, "--plb", a.plb);
    overlay(cfg, "mutation_rate", sub, "--mutation-rate", a.mutation_rate);
    overlay(cfg, "budget", sub, "--budget", a.budget);
    overlay(cfg, "seeds", sub, "--seeds", a.seeds);
    overlay(cfg, "trace", sub, "--trace", a.trace);

    if (a.problem.empty()) {
        throw evo::ConfigError("solve requires a problem (mis or mc)");
    }
    if (a.graph_path.empty()) {
        throw evo::ConfigError("solve requires --graph");
    }
    const evo::EvolutionKind kind = evo::EvolutionType::parse_kind(a.evolution);
    apply_generalist_defaults(kind, a.mu, a.lambda, a.rc, a.plb);
    const std::vector<std::uint64_t> seeds = parse_u64_list(a.seeds, "seed");

    maybe_print_config(a.common, json{{"command", "solve"},
                                      {"problem", a.problem},
                                      {"graph", a.graph_path},
                                      {"evolution", std::string(evo::kind_name(kind))},
                                      {"mu", a.mu},
                                      {"lambda", a.lambda},
                                      {"rc", a.rc},
                                      {"plb", a.plb},
                                      {"mutation_rate", a.mutation_rate},
                                      {"budget", a.budget},
                                      {"seeds", seeds},
                                      {"trace", a.trace},
                                      {"threads", a.common.threads}});

    auto graph = std::make_shared<const evo::Graph>(
        evo::Graph::read_edge_list(std::filesystem::path(a.graph_path)));
    const std::unique_ptr<evo::Problem> problem = evo::make_problem(a.problem, graph);

    evo::EAConfig ea;
    ea.mu = a.mu;
    ea.lambda = a.lambda;
    ea.crossover_rate = a.rc;
    ea.mutation_rate = a.mutation_rate;
    ea.budget = a.budget;
    ea.evolution = kind == evo::EvolutionKind::LB ? evo::EvolutionType::lb(a.plb)
                                                  : evo::EvolutionType{kind, 0.0};
    ea.validate(problem->dimension());

    std::vector<evo::RunRecord> records(seeds.size());
    evo::parallel_for(seeds.size(), a.common.threads, [&](std::size_t i) {
        evo::EAConfig run_cfg = ea;
        run_cfg.seed = seeds[i];
        records[i] = evo::run_mu_plus_lambda(run_cfg, *problem);
    });

    double mean = 0.0;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        std::cout << "seed " << seeds[i] << ": best " << evo::format_double(records[i].best_fitness)
                  << "\n";
        mean += records[i].best_fitness;
    }
    mean /= static_cast<double>(seeds.size());
    double var = 0.0;
    if (seeds.size() > 1) {
        for (const auto& rec : records) {
            var += (rec.best_fitness - mean) * (rec.best_fitness - mean);
        }
        var /= static_cast<double>(seeds.size() - 1);
    }
    std::cout << "mean " << evo::format_double(mean) << " std "
              << evo::format_double(std::sqrt(var)) << "\n";

    if (!a.trace.empty()) {
        std::ofstream out(a.trace);
        if (!out) {
            throw evo::IoError("cannot open " + a.trace + " for writing");
        }
        out << "seed,offspring_evals,best_fitness,mean_pairwise_hamming\n";
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            const auto& rec = records[i];
            for (std::size_t s = 0; s < rec.convergence.size(); ++s) {
                out << seeds[i] << ',' << rec.convergence[s].first << ','
                    << evo::format_double(rec.convergence[s].second) << ','
                    << evo::format_double(rec.diversity[s].second) << '\n';
            }
        }
    }
    return 0;
}

// -------------------------------------------------------------------- grid

struct GridArgs {
    CommonArgs common;
    std::string out_cells;
    std::string out_summary;
    std::uint64_t budget = 0; // 0: take from config or default 40000
    std::string candidate;    // "mu,lambda,rc[,plb]"
};

int run_grid(GridArgs& a, const CLI::App& sub) {
    if (a.common.config_path.empty()) {
        throw evo::ConfigError("grid requires --config");
    }
    const json cfg = load_config(a.common.config_path);

    if (!cfg.contains("problem") || !cfg.contains("graphs")) {
        throw evo::ConfigError("grid config must define \"problem\" and \"graphs\"");
    }
    const std::string problem = cfg.at("problem").get<std::string>();
    const auto graph_paths = cfg.at("graphs").get<std::vector<std::string>>();
    if (graph_paths.empty()) {
        throw evo::ConfigError("grid config: empty graph list");
    }

    std::vector<std::string> evolution_names{"darwinian", "baldwinian", "lamarckian", "lb"};
    if (cfg.contains("evolutions")) {
        evolution_names = cfg.at("evolutions").get<std::vector<std::string>>();
    }
    std::vector<evo::EvolutionKind> types;
    for (const auto& name : evolution_names) {
        types.push_back(evo::EvolutionType::parse_kind(name));
    }

    std::vector<std::uint64_t> seeds{0, 1, 2};
    if (cfg.contains("seeds")) {
        seeds = cfg.at("seeds").get<std::vector<std::uint64_t>>();
    }

    std::uint64_t budget = 40000;
    if (cfg.contains("budget")) {
        budget = cfg.at("budget").get<std::uint64_t>();
    }
    if (sub.count("--budget") != 0) {
        budget = a.budget;
    }

    evo::GridSpec spec;
    if (cfg.contains("grid")) {
        const json& grid = cfg.at("grid");
        if (grid.contains("mu")) {
            spec.mu_values = grid.at("mu").get<std::vector<std::size_t>>();
        }
        if (grid.contains("lambda")) {
            spec.lambda_values = grid.at("lambda").get<std::vector<std::size_t>>();
        }
        if (grid.contains("rc")) {
            spec.rc_values = grid.at("rc").get<std::vector<double>>();
        }
        if (grid.contains("plb")) {
            spec.plb_values = grid.at("plb").get<std::vector<double>>();
        }
    }

    std::string out_cells = cfg.value("out_cells", "grid_cells.csv");
    if (sub.count("--out") != 0) {
        out_cells = a.out_cells;
    }
    std::string out_summary = cfg.value("out_summary", "grid_summary.csv");
    if (sub.count("--summary") != 0) {
        out_summary = a.out_summary;
    }
    std::string candidate = cfg.value("candidate", "");
    if (sub.count("--candidate") != 0) {
        candidate = a.candidate;
    }

    maybe_print_config(a.common,
                       json{{"command", "grid"},
                            {"problem", problem},
                            {"graphs", graph_paths},
                            {"evolutions", evolution_names},
                            {"seeds", seeds},
                            {"budget", budget},
                            {"grid",
                             {{"mu", spec.mu_values},
                              {"lambda", spec.lambda_values},
                              {"rc", spec.rc_values},
                              {"plb", spec.plb_values}}},
                            {"out_cells", out_cells},
                            {"out_summary", out_summary},
                            {"candidate", candidate},
                            {"threads", a.common.threads}});

    std::vector<std::shared_ptr<const evo::Graph>> graphs;
    std::vector<std::string> graph_ids;
    for (const auto& path : graph_paths) {
        graphs.push_back(std::make_shared<const evo::Graph>(
            evo::Graph::read_edge_list(std::filesystem::path(path))));
        graph_ids.push_back(std::filesystem::path(path).filename().string());
    }

    const evo::GridReport report =
        evo::grid_search(spec, types, problem, graphs, graph_ids, seeds, budget, a.common.threads);
    evo::write_grid_csv(std::filesystem::path(out_cells), report.rows);

    std::ofstream summary(out_summary);
    if (!summary) {
        throw evo::IoError("cannot open " + out_summary + " for writing");
    }
    summary << "evolution,mu,lambda,rc,plb,mean_best\n";
    for (const auto& best : report.best) {
        summary << evo::kind_name(best.cell.evolution) << ',' << best.cell.mu << ','
                << best.cell.lambda << ',' << evo::format_double(best.cell.rc) << ','
                << evo::format_double(best.cell.plb) << ',' << evo::format_double(best.mean_best)
                << '\n';
        std::cout << "best " << evo::kind_name(best.cell.evolution) << ": mu=" << best.cell.mu
                  << " lambda=" << best.cell.lambda << " rc=" << evo::format_double(best.cell.rc)
                  << " plb=" << evo::format_double(best.cell.plb)
                  << " mean_best=" << evo::format_double(best.mean_best) << "\n";
    }
    std::cout << "wrote " << out_cells << " (" << report.rows.size() << " rows) and " << out_summary
              << "\n";

    // Robustness report: quality loss of one fixed configuration against the
    // per-evolution best, as (best - candidate) / best * 100.
    if (!candidate.empty()) {
        const auto parts = split_list(candidate);
        if (parts.size() != 3 && parts.size() != 4) {
            throw evo::ConfigError("--candidate expects mu,lambda,rc[,plb]");
        }
        const std::size_t cand_mu = std::stoull(parts[0]);
        const std::size_t cand_lambda = std::stoull(parts[1]);
        const double cand_rc = std::stod(parts[2]);
        const double cand_plb = parts.size() == 4 ? std::stod(parts[3]) : 0.15;

        for (const auto& best : report.best) {
            const evo::EvolutionKind type = best.cell.evolution;
            double sum = 0.0;
            std::size_t count = 0;
            for (const auto& row : report.rows) {
                if (row.cell.evolution == type && row.cell.mu == cand_mu &&
                    row.cell.lambda == cand_lambda && row.cell.rc == cand_rc &&
                    (type != evo::EvolutionKind::LB || row.cell.plb == cand_plb)) {
                    sum += row.best_fitness;
                    ++count;
                }
            }
            if (count == 0) {
                throw evo::ConfigError("candidate configuration is not a cell of this grid");
            }
            const double cand_mean = sum / static_cast<double>(count);
            std::cout << "loss " << evo::kind_name(type) << ": "
                      << evo::format_double(evo::relative_loss_pct(best.mean_best, cand_mean))
                      << "%\n";
        }
    }
    return 0;
}

// --------------------------------------------------------------- dlb-scale

struct DlbScaleArgs {
    CommonArgs common;
    std::uint64_t k = 2;
    std::string ns;
    std::uint64_t reps = 50;
    std::string types = "darwin,lamarck,baldwin";
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 1000000000ULL;
    std::string out = "dlb_scaling.csv";
};

int run_dlb_scale(DlbScaleArgs& a, const CLI::App& sub) {
    const json cfg = load_config(a.common.config_path);
    overlay(cfg, "k", sub, "--k", a.k);
    overlay(cfg, "n", sub, "--n", a.ns);
    overlay(cfg, "reps", sub, "--reps", a.reps);
    overlay(cfg, "types", sub, "--types", a.types);
    overlay(cfg, "seed", sub, "--seed", a.seed);
    overlay(cfg, "max_iterations", sub, "--max-iterations", a.max_iterations);
    overlay(cfg, "out", sub, "--out", a.out);

    if (a.ns.empty()) {
        throw evo::ConfigError("dlb-scale requires --n (comma-separated sizes)");
    }
    const std::vector<std::uint64_t> ns64 = parse_u64_list(a.ns, "n");
    const std::vector<std::size_t> ns(ns64.begin(), ns64.end());
    const std::vector<evo::EvolutionKind> types = parse_kind_list(a.types);

    maybe_print_config(a.common, json{{"command", "dlb-scale"},
                                      {"k", a.k},
                                      {"n", ns},
                                      {"reps", a.reps},
                                      {"types", a.types},
                                      {"seed", a.seed},
                                      {"max_iterations", a.max_iterations},
                                      {"out", a.out},
                                      {"threads", a.common.threads}});

    const evo::ScalingReport report = evo::dlb_scaling_experiment(
        a.k, ns, a.reps, types, a.seed, a.max_iterations, a.common.threads);

    for (const auto& series : report.series) {
        std::cout << evo::kind_name(series.evolution) << ": slope "
                  << evo::format_double(series.slope) << " stderr "
                  << evo::format_double(series.slope_stderr) << "\n";
        for (const auto& pt : series.points) {
            std::cout << "  n=" << pt.n << " mean_iterations="
                      << evo::format_double(pt.mean_iterations)
                      << " mean_pessimistic_evals=" << evo::format_double(pt.mean_pessimistic_evals)
                      << "\n";
        }
    }
    if (!report.all_success) {
        std::cerr << "warning: some runs hit max_iterations before reaching the optimum\n";
    }
    evo::write_scaling_csv(std::filesystem::path(a.out), report.runs);
    std::cout << "wrote " << a.out << " (" << report.runs.size() << " rows)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Memetic (mu+lambda) evolutionary algorithms for maximum independent set and "
                 "max-cut, plus deceptive-leading-blocks runtime scaling"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Generate a random graph edge-list file");
    generate->add_option("model", gen.model, "Graph model: er or ba");
    generate->add_option("--n", gen.n, "Vertex count");
    generate->add_option("--p", gen.p, "Edge probability (er)");
    generate->add_option("--m", gen.m, "Attachment degree (ba)");
    generate->add_option("--seed", gen.seed, "Generator seed");
    generate->add_option("-o,--out", gen.out, "Output path (default graph.el)");
    add_common(*generate, gen.common);

    SolveArgs solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Run the (mu+lambda) EA on a graph problem");
    solve_cmd->add_option("problem", solve.problem, "Problem: mis or mc");
    solve_cmd->add_option("--graph", solve.graph_path, "Edge-list file");
    solve_cmd->add_option("--evolution", solve.evolution,
                          "darwinian | baldwinian | lamarckian | lb (default baldwinian)");
    solve_cmd->add_option("--mu", solve.mu,
                          "Parent count (default: generalist config, darwinian 50, baldwinian "
                          "250, lamarckian 10, lb 250)");
    solve_cmd->add_option("--lambda", solve.lambda,
                          "Offspring count (default: generalist config, darwinian 250, baldwinian "
                          "50, lamarckian 10, lb 250)");
    solve_cmd->add_option("--rc", solve.rc,
                          "Crossover rate (default: generalist config, darwinian 1.0, baldwinian "
                          "0.9, lamarckian 0.0, lb 1.0)");
    solve_cmd->add_option("--plb", solve.plb, "LB replacement probability (default 0.15)");
    solve_cmd->add_option("--mutation-rate", solve.mutation_rate,
                          "Per-bit mutation rate (default 1/n)");
    solve_cmd->add_option("--budget", solve.budget,
                          "Offspring evaluation budget (default 40000)");
    solve_cmd->add_option("--seeds", solve.seeds, "Comma-separated run seeds (default 0,1,2)");
    solve_cmd->add_option("--trace", solve.trace, "Write per-seed convergence/diversity CSV");
    add_common(*solve_cmd, solve.common);

    GridArgs grid;
    CLI::App* grid_cmd = app.add_subcommand("grid", "Parameter grid search driven by a config file");
    grid_cmd->add_option("--out", grid.out_cells, "Cell CSV path (default grid_cells.csv)");
    grid_cmd->add_option("--summary", grid.out_summary,
                         "Best-config summary CSV path (default grid_summary.csv)");
    grid_cmd->add_option("--budget", grid.budget, "Offspring evaluation budget");
    grid_cmd->add_option("--candidate", grid.candidate,
                         "mu,lambda,rc[,plb] grid cell; report its relative quality loss "
                         "against each evolution type's best cell");
    add_common(*grid_cmd, grid.common);

    DlbScaleArgs scale;
    CLI::App* scale_cmd = app.add_subcommand(
        "dlb-scale", "(1+1) EA runtime scaling on deceptive leading blocks, with ln-ln slope fits");
    scale_cmd->add_option("--k", scale.k, "Block length (default 2)");
    scale_cmd->add_option("--n", scale.ns, "Comma-separated problem sizes, multiples of k");
    scale_cmd->add_option("--reps", scale.reps, "Repetitions per (type, n) (default 50)");
    scale_cmd->add_option("--types", scale.types,
                          "Comma-separated types (default darwin,lamarck,baldwin)");
    scale_cmd->add_option("--seed", scale.seed, "Root seed");
    scale_cmd->add_option("--max-iterations", scale.max_iterations,
                          "Per-run iteration cap (default 1e9)");
    scale_cmd->add_option("-o,--out", scale.out, "Run CSV path (default dlb_scaling.csv)");
    add_common(*scale_cmd, scale.common);

    try {
        app.parse(argc, argv);
        if (generate->parsed()) {
            return run_generate(gen, *generate);
        }
        if (solve_cmd->parsed()) {
            return run_solve(solve, *solve_cmd);
        }
        if (grid_cmd->parsed()) {
            return run_grid(grid, *grid_cmd);
        }
        if (scale_cmd->parsed()) {
            return run_dlb_scale(scale, *scale_cmd);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
