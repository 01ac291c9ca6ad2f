#include "evo/problem.hpp"

#include <algorithm>

namespace evo {

namespace {

/// Uniform pick among tied candidates; a unique candidate costs no draw.
Vertex pick_tied(const std::vector<Vertex>& ties, Rng& rng) {
    if (ties.size() == 1) {
        return ties[0];
    }
    return ties[rand_below(rng, ties.size())];
}

} // namespace

MisProblem::MisProblem(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {}

double MisProblem::evaluate(const BitString& x) const {
    const std::size_t internal = graph_->internal_edges(x);
    if (internal == 0) {
        return static_cast<double>(x.popcount());
    }
    return -static_cast<double>(internal);
}

std::int64_t MisProblem::violation_count(const BitString& x, Vertex v) const {
    if (x.size() != graph_->num_vertices()) {
        throw LengthMismatch("violation_count: genotype length != vertex count");
    }
    if (v >= graph_->num_vertices()) {
        throw VertexOutOfRange("violation_count: vertex " + std::to_string(v));
    }
    if (!x.get(v)) {
        return 0;
    }
    std::int64_t c = 0;
    for (Vertex w : graph_->neighbors(v)) {
        c += x.get(w) ? 1 : 0;
    }
    return c;
}

LocalSearchResult MisProblem::repair(const BitString& x, Rng& rng) const {
    const Graph& g = *graph_;
    if (x.size() != g.num_vertices()) {
        throw LengthMismatch("repair: genotype length != vertex count");
    }

    BitString cur = x;
    std::vector<std::int64_t> count(g.num_vertices(), 0);
    std::vector<Vertex> violating; // selected vertices with count > 0; counts only shrink
    std::int64_t total = 0;

    cur.for_each_set([&](std::size_t v) {
        std::int64_t c = 0;
        for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
            c += cur.get(w) ? 1 : 0;
        }
        count[v] = c;
        total += c;
        if (c > 0) {
            violating.push_back(static_cast<Vertex>(v));
        }
    });

    std::uint64_t steps = 0;
    std::vector<Vertex> ties;
    while (total > 0) {
        // Compact stale entries and find the maximal violation count.
        std::int64_t best = 0;
        std::size_t keep = 0;
        for (Vertex v : violating) {
            if (count[v] > 0) {
                violating[keep++] = v;
                best = std::max(best, count[v]);
            }
        }
        violating.resize(keep);

        ties.clear();
        for (Vertex v : violating) {
            if (count[v] == best) {
                ties.push_back(v);
            }
        }
        std::sort(ties.begin(), ties.end());

        const Vertex v = pick_tied(ties, rng);
        cur.set(v, false);
        total -= 2 * count[v];
        count[v] = 0;
        for (Vertex w : g.neighbors(v)) {
            if (cur.get(w)) {
                --count[w];
            }
        }
        ++steps;
    }
    return {std::move(cur), steps};
}

McProblem::McProblem(std::shared_ptr<const Graph> graph) : graph_(std::move(graph)) {}

double McProblem::evaluate(const BitString& x) const {
    return static_cast<double>(graph_->cut_value(x));
}

LocalSearchResult McProblem::local_search(const BitString& x, Rng& rng) const {
    const Graph& g = *graph_;
    if (x.size() != g.num_vertices()) {
        throw LengthMismatch("local_search: genotype length != vertex count");
    }
    const Vertex n = g.num_vertices();

    BitString cur = x;
    // gain[v] = cut change from flipping v = (same-side neighbours) - (cut neighbours).
    std::vector<std::int64_t> gain(n, 0);
    std::vector<Vertex> active;
    std::vector<char> in_active(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::int64_t same = 0;
        const bool side = cur.get(v);
        for (Vertex w : g.neighbors(v)) {
            same += (cur.get(w) == side) ? 1 : -1;
        }
        gain[v] = same;
        if (same > 0) {
            active.push_back(v);
            in_active[v] = 1;
        }
    }

    std::uint64_t steps = 0;
    std::vector<Vertex> ties;
    for (;;) {
        std::int64_t best = 0;
        std::size_t keep = 0;
        for (Vertex v : active) {
            if (gain[v] > 0) {
                active[keep++] = v;
                best = std::max(best, gain[v]);
            } else {
                in_active[v] = 0;
            }
        }
        active.resize(keep);
        if (active.empty()) {
            break;
        }

        ties.clear();
        for (Vertex v : active) {
            if (gain[v] == best) {
                ties.push_back(v);
            }
        }
        std::sort(ties.begin(), ties.end());

        const Vertex v = pick_tied(ties, rng);
        cur.flip(v);
        gain[v] = -gain[v];
        const bool side = cur.get(v);
        for (Vertex w : g.neighbors(v)) {
            gain[w] += (cur.get(w) == side) ? 2 : -2;
            if (gain[w] > 0 && !in_active[w]) {
                active.push_back(w);
                in_active[w] = 1;
            }
        }
        ++steps;
    }
    return {std::move(cur), steps};
}

} // namespace evo
