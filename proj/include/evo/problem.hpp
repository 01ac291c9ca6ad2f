#pragma once

#include <cstdint>
#include <memory>
#include <string_view>

#include "evo/bitstring.hpp"
#include "evo/graph.hpp"
#include "evo/rng.hpp"

namespace evo {

struct LocalSearchResult {
    BitString point;
    std::uint64_t steps = 0;
};

/// A maximisation problem over fixed-length bit strings, paired with its
/// local search. Implementations are immutable and shareable; local searches
/// draw only from the caller's rng and use per-call scratch, so concurrent
/// runs never contend.
///
/// Contract: local_search never returns a point worse than its input, and
/// its output is a fixed point (re-running it cannot improve the fitness).
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::size_t dimension() const = 0;
    virtual double evaluate(const BitString& x) const = 0;
    virtual LocalSearchResult local_search(const BitString& x, Rng& rng) const = 0;
    virtual std::string_view name() const = 0;
};

/// Maximum Independent Set with a penalised fitness: the selection size when
/// independent, minus the number of internal edges otherwise. Infeasible
/// genotypes are allowed in the population; the local search is a repair.
class MisProblem final : public Problem {
public:
    explicit MisProblem(std::shared_ptr<const Graph> graph);

    std::size_t dimension() const override { return graph_->num_vertices(); }
    double evaluate(const BitString& x) const override;
    LocalSearchResult local_search(const BitString& x, Rng& rng) const override {
        return repair(x, rng);
    }
    std::string_view name() const override { return "mis"; }

    /// Number of selected neighbours of v, or 0 when v itself is unselected.
    std::int64_t violation_count(const BitString& x, Vertex v) const;

    /// Repair: repeatedly deselect a vertex of maximal violation count (ties
    /// uniform at random) until the selection is independent. Never adds a
    /// vertex. Returned step count is the number of deselections.
    LocalSearchResult repair(const BitString& x, Rng& rng) const;

    const Graph& graph() const { return *graph_; }

private:
    std::shared_ptr<const Graph> graph_;
};

/// Maximum Cut; every genotype is feasible, fitness is the cut size. The
/// local search flips a maximum-positive-gain vertex (ties uniform at
/// random) until no flip strictly improves the cut, maintaining gains
/// incrementally via an active list of positive-gain vertices.
class McProblem final : public Problem {
public:
    explicit McProblem(std::shared_ptr<const Graph> graph);

    std::size_t dimension() const override { return graph_->num_vertices(); }
    double evaluate(const BitString& x) const override;
    LocalSearchResult local_search(const BitString& x, Rng& rng) const override;
    std::string_view name() const override { return "mc"; }

    const Graph& graph() const { return *graph_; }

private:
    std::shared_ptr<const Graph> graph_;
};

} // namespace evo
