#include "evo/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

namespace evo {

Graph Graph::from_edge_list(Vertex n, std::span<const Edge> edges) {
    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);

    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw VertexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") out of range for n=" + std::to_string(n));
        }
        if (u == v) {
            throw SelfLoop("self-loop at vertex " + std::to_string(u));
        }
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) {
        g.offsets_[i] += g.offsets_[i - 1];
    }

    g.neighbors_.resize(edges.size() * 2);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }

    for (Vertex v = 0; v < n; ++v) {
        auto begin = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto end = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end) {
            throw DuplicateEdge("duplicate edge at vertex " + std::to_string(v));
        }
    }
    return g;
}

Graph Graph::gen_er(Vertex n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) {
        throw ConfigError("gen_er: p must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (rand_bool(rng, p)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return from_edge_list(n, edges);
}

Graph Graph::gen_ba(Vertex n, Vertex m, std::uint64_t seed) {
    if (m < 1 || m >= n) {
        throw InvalidAttachment("gen_ba: need 1 <= m < n, got m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) - 1 + static_cast<std::size_t>(n - m) * m);

    // Seed path on vertices 0..m-1.
    for (Vertex i = 0; i + 1 < m; ++i) {
        edges.emplace_back(i, i + 1);
    }

    // One entry per unit of degree; sampling an entry uniformly is
    // degree-proportional sampling.
    std::vector<Vertex> repeated;
    for (const auto& [u, v] : edges) {
        repeated.push_back(u);
        repeated.push_back(v);
    }

    std::vector<Vertex> targets;
    std::vector<char> chosen(n, 0);
    for (Vertex v = m; v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            Vertex t;
            if (repeated.empty()) {
                // m=1 start: the single seed vertex has degree zero, so fall
                // back to a uniform pick among existing vertices.
                t = static_cast<Vertex>(rand_below(rng, v));
            } else {
                t = repeated[rand_below(rng, repeated.size())];
            }
            if (!chosen[t]) {
                chosen[t] = 1;
                targets.push_back(t);
            }
        }
        for (Vertex t : targets) {
            chosen[t] = 0;
            edges.emplace_back(t, v);
            repeated.push_back(t);
            repeated.push_back(v);
        }
    }
    return from_edge_list(n, edges);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex v = 0; v < n_; ++v) {
        for (Vertex w : neighbors(v)) {
            if (v < w) {
                out.emplace_back(v, w);
            }
        }
    }
    return out;
}

std::size_t Graph::internal_edges(const BitString& x) const {
    if (x.size() != n_) {
        throw LengthMismatch("internal_edges: genotype length != vertex count");
    }
    std::size_t count = 0;
    x.for_each_set([&](std::size_t v) {
        for (Vertex w : neighbors(static_cast<Vertex>(v))) {
            if (w > v && x.get(w)) {
                ++count;
            }
        }
    });
    return count;
}

std::size_t Graph::cut_value(const BitString& x) const {
    if (x.size() != n_) {
        throw LengthMismatch("cut_value: genotype length != vertex count");
    }
    // Each cut edge is counted once, from its selected endpoint.
    std::size_t count = 0;
    x.for_each_set([&](std::size_t v) {
        for (Vertex w : neighbors(static_cast<Vertex>(v))) {
            if (!x.get(w)) {
                ++count;
            }
        }
    });
    return count;
}

void Graph::write_edge_list(std::ostream& out) const {
    out << "n " << n_ << " m " << num_edges() << "\n";
    for (const auto& [u, v] : edges()) {
        out << u << " " << v << "\n";
    }
}

void Graph::write_edge_list(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    write_edge_list(out);
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

Graph Graph::read_edge_list(std::istream& in) {
    std::string line;
    Vertex n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream ls(line);
        if (!have_header) {
            std::string kn, km;
            if (!(ls >> kn >> n >> km >> m) || kn != "n" || km != "m") {
                throw IoError("edge list: malformed header line: " + line);
            }
            have_header = true;
            edges.reserve(m);
        } else {
            Vertex u = 0, v = 0;
            if (!(ls >> u >> v)) {
                throw IoError("edge list: malformed edge line: " + line);
            }
            edges.emplace_back(u, v);
        }
    }
    if (!have_header) {
        throw IoError("edge list: missing header");
    }
    if (edges.size() != m) {
        throw IoError("edge list: header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
    }
    return from_edge_list(n, edges);
}

Graph Graph::read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return read_edge_list(in);
}

} // namespace evo
