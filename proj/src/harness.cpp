#include "evo/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include "evo/parallel.hpp"

namespace evo {

AggregateScore aggregate_scores(const std::vector<std::vector<double>>& per_graph_scores) {
    if (per_graph_scores.empty()) {
        throw EmptyInput("aggregate_scores: no graphs");
    }
    double mean_sum = 0.0;
    double std_sum = 0.0;
    for (const auto& scores : per_graph_scores) {
        if (scores.empty()) {
            throw EmptyInput("aggregate_scores: graph with no seed results");
        }
        double m = 0.0;
        for (double s : scores) {
            m += s;
        }
        m /= static_cast<double>(scores.size());
        mean_sum += m;

        double var = 0.0;
        if (scores.size() > 1) {
            for (double s : scores) {
                var += (s - m) * (s - m);
            }
            var /= static_cast<double>(scores.size() - 1);
        }
        std_sum += std::sqrt(var);
    }
    const auto g = static_cast<double>(per_graph_scores.size());
    return {mean_sum / g, std_sum / g};
}

std::vector<GridCell> enumerate_grid(const GridSpec& spec, const std::vector<EvolutionKind>& types) {
    std::vector<GridCell> cells;
    for (EvolutionKind type : types) {
        for (std::size_t mu : spec.mu_values) {
            for (std::size_t lambda : spec.lambda_values) {
                for (double rc : spec.rc_values) {
                    if (type == EvolutionKind::LB) {
                        for (double plb : spec.plb_values) {
                            cells.push_back({type, mu, lambda, rc, plb});
                        }
                    } else {
                        cells.push_back({type, mu, lambda, rc, 0.0});
                    }
                }
            }
        }
    }
    return cells;
}

std::unique_ptr<Problem> make_problem(std::string_view name, std::shared_ptr<const Graph> graph) {
    if (name == "mis") {
        return std::make_unique<MisProblem>(std::move(graph));
    }
    if (name == "mc") {
        return std::make_unique<McProblem>(std::move(graph));
    }
    throw ConfigError("unknown problem: " + std::string(name));
}

GridReport grid_search(const GridSpec& spec, const std::vector<EvolutionKind>& types,
                       std::string_view problem_name,
                       const std::vector<std::shared_ptr<const Graph>>& graphs,
                       const std::vector<std::string>& graph_ids,
                       const std::vector<std::uint64_t>& seeds, std::uint64_t budget,
                       unsigned threads) {
    if (graphs.empty()) {
        throw EmptyInput("grid_search: no graphs");
    }
    if (seeds.empty()) {
        throw EmptyInput("grid_search: no seeds");
    }
    if (graph_ids.size() != graphs.size()) {
        throw LengthMismatch("grid_search: graph_ids and graphs differ in length");
    }
    const std::vector<GridCell> cells = enumerate_grid(spec, types);

    std::vector<std::unique_ptr<Problem>> problems;
    problems.reserve(graphs.size());
    for (const auto& g : graphs) {
        problems.push_back(make_problem(problem_name, g));
    }

    GridReport report;
    const std::size_t runs = cells.size() * graphs.size() * seeds.size();
    report.rows.resize(runs);
    parallel_for(runs, threads, [&](std::size_t idx) {
        const std::size_t cell_idx = idx / (graphs.size() * seeds.size());
        const std::size_t rest = idx % (graphs.size() * seeds.size());
        const std::size_t graph_idx = rest / seeds.size();
        const std::size_t seed_idx = rest % seeds.size();
        const GridCell& cell = cells[cell_idx];

        EAConfig cfg;
        cfg.mu = cell.mu;
        cfg.lambda = cell.lambda;
        cfg.crossover_rate = cell.rc;
        cfg.budget = budget;
        cfg.evolution =
            cell.evolution == EvolutionKind::LB
                ? EvolutionType::lb(cell.plb)
                : EvolutionType{cell.evolution, 0.0};
        // Decorrelate runs across cells and graphs while keeping the
        // user-facing seed id in the report.
        cfg.seed = derive_seed(seeds[seed_idx], cell_idx * graphs.size() + graph_idx);

        const RunRecord rec = run_mu_plus_lambda(cfg, *problems[graph_idx]);
        report.rows[idx] = {cell,
                            graph_ids[graph_idx],
                            seeds[seed_idx],
                            rec.best_fitness,
                            rec.counters.offspring_evals,
                            rec.counters.ls_neighbor_evals,
                            rec.wall_time_s};
    });

    // Mean best fitness per cell, then the winner per evolution type with
    // lexicographic (mu, lambda, rc, plb) tie-breaking.
    const std::size_t per_cell = graphs.size() * seeds.size();
    for (EvolutionKind type : types) {
        bool found = false;
        GridBest best;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].evolution != type) {
                continue;
            }
            double mean = 0.0;
            for (std::size_t r = c * per_cell; r < (c + 1) * per_cell; ++r) {
                mean += report.rows[r].best_fitness;
            }
            mean /= static_cast<double>(per_cell);
            const auto key = std::tie(cells[c].mu, cells[c].lambda, cells[c].rc, cells[c].plb);
            const auto best_key =
                std::tie(best.cell.mu, best.cell.lambda, best.cell.rc, best.cell.plb);
            if (!found || mean > best.mean_best || (mean == best.mean_best && key < best_key)) {
                best = {cells[c], mean};
                found = true;
            }
        }
        if (found) {
            report.best.push_back(best);
        }
    }
    return report;
}

FitResult fit_exponent(std::span<const double> ns, std::span<const double> means) {
    if (ns.size() != means.size()) {
        throw LengthMismatch("fit_exponent: ns and means differ in length");
    }
    if (ns.size() < 3) {
        throw TooFewPoints("fit_exponent: need at least 3 points");
    }
    const std::size_t m = ns.size();
    std::vector<double> xs(m), ys(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!(ns[i] > 0.0) || !(means[i] > 0.0)) {
            throw NonPositiveInput("fit_exponent: inputs must be strictly positive");
        }
        xs[i] = std::log(ns[i]);
        ys[i] = std::log(means[i]);
    }
    double xbar = 0.0, ybar = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= static_cast<double>(m);
    ybar /= static_cast<double>(m);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (sxx == 0.0) {
        throw NonPositiveInput("fit_exponent: all ns identical");
    }
    const double slope = sxy / sxx;
    const double intercept = ybar - slope * xbar;
    double sse = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double r = ys[i] - (intercept + slope * xs[i]);
        sse += r * r;
    }
    const double variance = sse / static_cast<double>(m - 2);
    return {slope, std::sqrt(variance / sxx)};
}

ScalingReport dlb_scaling_experiment(std::size_t k, const std::vector<std::size_t>& ns,
                                     std::uint64_t repetitions,
                                     const std::vector<EvolutionKind>& types, std::uint64_t seed,
                                     std::uint64_t max_iterations, unsigned threads) {
    if (repetitions < 1) {
        throw ConfigError("dlb_scaling_experiment: repetitions must be >= 1");
    }
    for (std::size_t n : ns) {
        if (n == 0 || n % k != 0) {
            throw ConfigError("dlb_scaling_experiment: n=" + std::to_string(n) +
                              " is not a positive multiple of k=" + std::to_string(k));
        }
    }
    ScalingReport report;
    report.k = k;
    const std::size_t runs = types.size() * ns.size() * repetitions;
    report.runs.resize(runs);
    std::vector<char> monotone(runs, 1);

    parallel_for(runs, threads, [&](std::size_t idx) {
        const std::size_t type_idx = idx / (ns.size() * repetitions);
        const std::size_t rest = idx % (ns.size() * repetitions);
        const std::size_t n_idx = rest / repetitions;
        const std::uint64_t rep = rest % repetitions;

        const DlbProblem problem(ns[n_idx], k);
        const OnePlusOneResult res = run_one_plus_one(problem, types[type_idx],
                                                      derive_seed(seed, idx), max_iterations);
        report.runs[idx] = {types[type_idx],     k,
                            ns[n_idx],           rep,
                            res.iterations,      res.counters.ls_iterations,
                            res.counters.ls_neighbor_evals, res.success};
        monotone[idx] = res.fitness_monotone ? 1 : 0;
    });

    for (std::size_t i = 0; i < runs; ++i) {
        report.all_success = report.all_success && report.runs[i].success;
        report.all_monotone = report.all_monotone && monotone[i] != 0;
    }

    for (std::size_t t = 0; t < types.size(); ++t) {
        ScalingSeries series;
        series.evolution = types[t];
        std::vector<double> xs, ys;
        for (std::size_t ni = 0; ni < ns.size(); ++ni) {
            const std::size_t base = (t * ns.size() + ni) * repetitions;
            double mean_it = 0.0, mean_evals = 0.0;
            for (std::uint64_t r = 0; r < repetitions; ++r) {
                const ScalingRun& run = report.runs[base + r];
                mean_it += static_cast<double>(run.iterations);
                double evals = static_cast<double>(run.iterations);
                if (types[t] != EvolutionKind::Darwinian) {
                    evals += static_cast<double>(run.ls_iterations) *
                             static_cast<double>(ns[ni]);
                }
                mean_evals += evals;
            }
            mean_it /= static_cast<double>(repetitions);
            mean_evals /= static_cast<double>(repetitions);

            double var = 0.0;
            if (repetitions > 1) {
                for (std::uint64_t r = 0; r < repetitions; ++r) {
                    const double d = static_cast<double>(report.runs[base + r].iterations) - mean_it;
                    var += d * d;
                }
                var /= static_cast<double>(repetitions - 1);
            }
            series.points.push_back({ns[ni], mean_it,
                                     std::sqrt(var / static_cast<double>(repetitions)), mean_evals,
                                     repetitions});
            xs.push_back(static_cast<double>(ns[ni]));
            ys.push_back(mean_it);
        }
        // Mean iteration counts of 0 (possible at toy sizes, where a run can
        // succeed at initialisation) admit no ln-ln fit.
        const bool fittable = xs.size() >= 3 &&
                              std::all_of(ys.begin(), ys.end(), [](double y) { return y > 0.0; });
        if (fittable) {
            const FitResult fit = fit_exponent(xs, ys);
            series.slope = fit.slope;
            series.slope_stderr = fit.stderr_;
        } else {
            series.slope = std::numeric_limits<double>::quiet_NaN();
            series.slope_stderr = std::numeric_limits<double>::quiet_NaN();
        }
        report.series.push_back(std::move(series));
    }
    return report;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s, const char* what) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw IoError(std::string("csv: bad ") + what + " value: " + std::string(s));
    }
    return v;
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw IoError(std::string("csv: bad ") + what + " value: " + std::string(s));
    }
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
        fields.back().pop_back();
    }
    return fields;
}

void expect_header(std::istream& in, const std::string& expected, const char* what) {
    std::string line;
    if (!std::getline(in, line)) {
        throw IoError(std::string(what) + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != expected) {
        throw IoError(std::string(what) + ": unexpected header: " + line);
    }
}

} // namespace

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows) {
    out << "evolution,mu,lambda,rc,plb,graph_id,seed,best_fitness,offspring_evals,"
           "ls_neighbor_evals,wall_time_s\n";
    for (const auto& r : rows) {
        out << kind_name(r.cell.evolution) << ',' << r.cell.mu << ',' << r.cell.lambda << ','
            << format_double(r.cell.rc) << ',' << format_double(r.cell.plb) << ',' << r.graph_id
            << ',' << r.seed << ',' << format_double(r.best_fitness) << ',' << r.offspring_evals
            << ',' << r.ls_neighbor_evals << ',' << format_double(r.wall_time_s) << '\n';
    }
}

std::vector<GridRow> read_grid_csv(std::istream& in) {
    expect_header(in,
                  "evolution,mu,lambda,rc,plb,graph_id,seed,best_fitness,offspring_evals,"
                  "ls_neighbor_evals,wall_time_s",
                  "grid csv");
    std::vector<GridRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 11) {
            throw IoError("grid csv: expected 11 fields, got " + std::to_string(f.size()));
        }
        GridRow r;
        r.cell.evolution = EvolutionType::parse_kind(f[0]);
        r.cell.mu = parse_u64(f[1], "mu");
        r.cell.lambda = parse_u64(f[2], "lambda");
        r.cell.rc = parse_double(f[3], "rc");
        r.cell.plb = parse_double(f[4], "plb");
        r.graph_id = f[5];
        r.seed = parse_u64(f[6], "seed");
        r.best_fitness = parse_double(f[7], "best_fitness");
        r.offspring_evals = parse_u64(f[8], "offspring_evals");
        r.ls_neighbor_evals = parse_u64(f[9], "ls_neighbor_evals");
        r.wall_time_s = parse_double(f[10], "wall_time_s");
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_scaling_csv(std::ostream& out, const std::vector<ScalingRun>& runs) {
    out << "evolution,k,n,rep,iterations,ls_iterations,neighbor_evals,success\n";
    for (const auto& r : runs) {
        out << kind_name(r.evolution) << ',' << r.k << ',' << r.n << ',' << r.rep << ','
            << r.iterations << ',' << r.ls_iterations << ',' << r.neighbor_evals << ','
            << (r.success ? 1 : 0) << '\n';
    }
}

std::vector<ScalingRun> read_scaling_csv(std::istream& in) {
    expect_header(in, "evolution,k,n,rep,iterations,ls_iterations,neighbor_evals,success",
                  "scaling csv");
    std::vector<ScalingRun> runs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 8) {
            throw IoError("scaling csv: expected 8 fields, got " + std::to_string(f.size()));
        }
        ScalingRun r;
        r.evolution = EvolutionType::parse_kind(f[0]);
        r.k = parse_u64(f[1], "k");
        r.n = parse_u64(f[2], "n");
        r.rep = parse_u64(f[3], "rep");
        r.iterations = parse_u64(f[4], "iterations");
        r.ls_iterations = parse_u64(f[5], "ls_iterations");
        r.neighbor_evals = parse_u64(f[6], "neighbor_evals");
        r.success = parse_u64(f[7], "success") != 0;
        runs.push_back(std::move(r));
    }
    return runs;
}

namespace {

template <class Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    writer(out);
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

template <class Reader>
auto read_file(const std::filesystem::path& path, Reader&& reader) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return reader(in);
}

} // namespace

void write_grid_csv(const std::filesystem::path& path, const std::vector<GridRow>& rows) {
    write_file(path, [&](std::ostream& out) { write_grid_csv(out, rows); });
}

std::vector<GridRow> read_grid_csv(const std::filesystem::path& path) {
    return read_file(path, [](std::istream& in) { return read_grid_csv(in); });
}

void write_scaling_csv(const std::filesystem::path& path, const std::vector<ScalingRun>& runs) {
    write_file(path, [&](std::ostream& out) { write_scaling_csv(out, runs); });
}

std::vector<ScalingRun> read_scaling_csv(const std::filesystem::path& path) {
    return read_file(path, [](std::istream& in) { return read_scaling_csv(in); });
}

} // namespace evo
