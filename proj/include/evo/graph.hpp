#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "evo/bitstring.hpp"
#include "evo/errors.hpp"
#include "evo/rng.hpp"

namespace evo {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph in compressed sparse row form. Immutable after
/// construction, so instances can be shared across concurrent runs.
class Graph {
public:
    Graph() = default;

    /// Build from an explicit edge list. Each undirected edge must appear
    /// exactly once (in either orientation); self-loops and duplicates are
    /// rejected.
    static Graph from_edge_list(Vertex n, std::span<const Edge> edges);
    static Graph from_edge_list(Vertex n, const std::vector<Edge>& edges) {
        return from_edge_list(n, std::span<const Edge>(edges));
    }

    /// Erdős–Rényi G(n, p): every vertex pair is an edge independently with
    /// probability p.
    static Graph gen_er(Vertex n, double p, std::uint64_t seed);

    /// Barabási–Albert preferential attachment. The seed component is an
    /// m-vertex path; each later vertex attaches m edges to distinct existing
    /// vertices picked proportionally to current degree. Always connected.
    static Graph gen_ba(Vertex n, Vertex m, std::uint64_t seed);

    Vertex num_vertices() const { return n_; }
    std::size_t num_edges() const { return neighbors_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const std::size_t> offsets() const { return offsets_; }
    std::span<const Vertex> adjacency() const { return neighbors_; }

    /// Edge list with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Number of edges with both endpoints selected. Touches only selected
    /// vertices' adjacency lists, so the cost is O(|E|) rather than O(n^2).
    std::size_t internal_edges(const BitString& x) const;

    /// Number of edges with exactly one endpoint selected.
    std::size_t cut_value(const BitString& x) const;

    /// Plain-text edge list: header "n <count> m <count>", one "u v" line per
    /// edge (0-indexed, each undirected edge once); '#' starts a comment.
    void write_edge_list(std::ostream& out) const;
    void write_edge_list(const std::filesystem::path& path) const;
    static Graph read_edge_list(std::istream& in);
    static Graph read_edge_list(const std::filesystem::path& path);

private:
    Vertex n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbors_;
};

} // namespace evo
