#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evo/ea.hpp"
#include "evo/graph.hpp"
#include "evo/problem.hpp"

namespace evo {

struct AggregateScore {
    double mean = 0.0;
    double mean_std = 0.0;
};

/// Mean of per-graph means and mean of per-graph sample standard deviations
/// (a single seed has std 0). The outer index is the graph, the inner the
/// per-seed best scores.
AggregateScore aggregate_scores(const std::vector<std::vector<double>>& per_graph_scores);

/// Parameter grid shared by all evolution types; p_lb applies to LB only.
struct GridSpec {
    std::vector<std::size_t> mu_values{10, 50, 250};
    std::vector<std::size_t> lambda_values{10, 50, 250};
    std::vector<double> rc_values{0.0, 0.5, 0.9, 1.0};
    std::vector<double> plb_values{0.15, 0.3, 0.5, 0.9};
};

struct GridCell {
    EvolutionKind evolution = EvolutionKind::Darwinian;
    std::size_t mu = 0;
    std::size_t lambda = 0;
    double rc = 0.0;
    double plb = 0.0; // 0 for the non-LB types
};

std::vector<GridCell> enumerate_grid(const GridSpec& spec, const std::vector<EvolutionKind>& types);

/// One EA run inside a grid search; matches the cell CSV schema.
struct GridRow {
    GridCell cell;
    std::string graph_id;
    std::uint64_t seed = 0;
    double best_fitness = 0.0;
    std::uint64_t offspring_evals = 0;
    std::uint64_t ls_neighbor_evals = 0;
    double wall_time_s = 0.0;
};

struct GridBest {
    GridCell cell;
    double mean_best = 0.0;
};

struct GridReport {
    std::vector<GridRow> rows;   // every (cell, graph, seed) run
    std::vector<GridBest> best;  // per evolution type, in input type order
};

/// Run every grid cell on every (graph, seed) and pick, per evolution type,
/// the cell maximising the mean best fitness; ties go to the
/// lexicographically smallest (mu, lambda, rc, plb).
GridReport grid_search(const GridSpec& spec, const std::vector<EvolutionKind>& types,
                       std::string_view problem_name,
                       const std::vector<std::shared_ptr<const Graph>>& graphs,
                       const std::vector<std::string>& graph_ids,
                       const std::vector<std::uint64_t>& seeds, std::uint64_t budget,
                       unsigned threads);

/// Relative quality loss (%) of a candidate score against the per-case best.
inline double relative_loss_pct(double best, double candidate) {
    return (best - candidate) / best * 100.0;
}

struct FitResult {
    double slope = 0.0;
    double stderr_ = 0.0;
};

/// Ordinary least squares of ln(mean) on ln(n); returns the slope and its
/// standard error. Requires >= 3 strictly positive points.
FitResult fit_exponent(std::span<const double> ns, std::span<const double> means);

/// One (1+1) EA run inside the scaling experiment; matches the CSV schema.
struct ScalingRun {
    EvolutionKind evolution = EvolutionKind::Darwinian;
    std::size_t k = 0;
    std::size_t n = 0;
    std::uint64_t rep = 0;
    std::uint64_t iterations = 0;
    std::uint64_t ls_iterations = 0;
    std::uint64_t neighbor_evals = 0;
    bool success = false;
};

struct ScalingPoint {
    std::size_t n = 0;
    double mean_iterations = 0.0;
    double stderr_iterations = 0.0;
    /// Pessimistic evaluation model: iterations, plus ls_iterations * n for
    /// the local-search types (one local-search move charged n evaluations).
    double mean_pessimistic_evals = 0.0;
    std::uint64_t reps = 0;
};

struct ScalingSeries {
    EvolutionKind evolution = EvolutionKind::Darwinian;
    std::vector<ScalingPoint> points;
    double slope = 0.0;        // ln-ln slope of mean iterations vs n
    double slope_stderr = 0.0;
};

struct ScalingReport {
    std::size_t k = 0;
    std::vector<ScalingRun> runs;
    std::vector<ScalingSeries> series;
    bool all_success = true;
    bool all_monotone = true;
};

/// Measure mean (1+1) EA runtimes on deceptive leading blocks for each
/// (evolution type, n) and fit ln-ln slopes. Per-run seeds derive from the
/// root seed and the run index, so the report is reproducible and
/// independent of execution order.
ScalingReport dlb_scaling_experiment(std::size_t k, const std::vector<std::size_t>& ns,
                                     std::uint64_t repetitions,
                                     const std::vector<EvolutionKind>& types, std::uint64_t seed,
                                     std::uint64_t max_iterations, unsigned threads);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows);
void write_grid_csv(const std::filesystem::path& path, const std::vector<GridRow>& rows);
std::vector<GridRow> read_grid_csv(std::istream& in);
std::vector<GridRow> read_grid_csv(const std::filesystem::path& path);

void write_scaling_csv(std::ostream& out, const std::vector<ScalingRun>& runs);
void write_scaling_csv(const std::filesystem::path& path, const std::vector<ScalingRun>& runs);
std::vector<ScalingRun> read_scaling_csv(std::istream& in);
std::vector<ScalingRun> read_scaling_csv(const std::filesystem::path& path);

/// Problem factory for the two built-in graph problems ("mis" or "mc").
std::unique_ptr<Problem> make_problem(std::string_view name, std::shared_ptr<const Graph> graph);

} // namespace evo
