#ifndef SUBPOW_DIGRAPH_HPP
#define SUBPOW_DIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace subpow {

using Vertex = std::uint32_t;

struct Edge {
    Vertex from;
    Vertex to;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite directed graph on the dense vertex range [0, vertex_count).
/// Loops are allowed, parallel edges are not. Immutable once built.
class Digraph {
public:
    Digraph() = default;

    /// Throws subpow::invalid_argument on an out-of-range endpoint or a
    /// repeated edge.
    Digraph(std::size_t vertex_count, std::span<const Edge> edges) : out_(vertex_count) {
        if (vertex_count > std::numeric_limits<Vertex>::max()) {
            throw invalid_argument("vertex count exceeds the 32-bit vertex id range");
        }
        for (const auto& e : edges) {
            if (e.from >= vertex_count || e.to >= vertex_count) {
                throw invalid_argument("edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                                       ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
            }
            out_[e.from].push_back(e.to);
        }
        for (Vertex v = 0; v < out_.size(); ++v) {
            auto& succ = out_[v];
            std::sort(succ.begin(), succ.end());
            if (auto dup = std::adjacent_find(succ.begin(), succ.end()); dup != succ.end()) {
                throw invalid_argument("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
            }
        }
        edge_count_ = edges.size();
    }

    Digraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : Digraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const noexcept { return out_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Sorted successor list of `v`.
    std::span<const Vertex> successors(Vertex v) const { return out_.at(v); }

    std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }

    bool has_edge(Vertex from, Vertex to) const {
        if (from >= out_.size()) return false;
        const auto& succ = out_[from];
        return std::binary_search(succ.begin(), succ.end(), to);
    }

    std::vector<std::size_t> in_degrees() const {
        std::vector<std::size_t> deg(out_.size(), 0);
        for (const auto& succ : out_) {
            for (auto w : succ) ++deg[w];
        }
        return deg;
    }

    /// All edges, ordered by (from, to).
    std::vector<Edge> edges() const {
        std::vector<Edge> result;
        result.reserve(edge_count_);
        for (Vertex v = 0; v < out_.size(); ++v) {
            for (auto w : out_[v]) result.push_back({v, w});
        }
        return result;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

private:
    std::vector<std::vector<Vertex>> out_;
    std::size_t edge_count_ = 0;
};

/// A directed cycle (v_1, ..., v_k) of distinct vertices; a single vertex is a loop.
struct VertexCycle {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }

    friend bool operator==(const VertexCycle&, const VertexCycle&) = default;
};

/// The directed cycle C_l: edges j -> j+1 mod l. C_1 is a single loop.
inline Digraph make_cycle(std::size_t l) {
    if (l == 0) throw invalid_argument("cycle length must be at least 1");
    std::vector<Edge> edges;
    edges.reserve(l);
    for (std::size_t j = 0; j < l; ++j) {
        edges.push_back({static_cast<Vertex>(j), static_cast<Vertex>((j + 1) % l)});
    }
    return Digraph(l, edges);
}

inline bool is_permutation_graph(const Digraph& g) {
    const auto in = g.in_degrees();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) != 1 || in[v] != 1) return false;
    }
    return true;
}

/// Splits a permutation graph into its cycles. Each cycle starts at its
/// smallest vertex and cycles are ordered by that vertex.
inline std::vector<VertexCycle> decompose_permutation_cycles(const Digraph& g) {
    const auto in = g.in_degrees();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) != 1 || in[v] != 1) {
            throw not_permutation_graph("not a permutation graph: vertex " + std::to_string(v) + " has out-degree " +
                                        std::to_string(g.out_degree(v)) + " and in-degree " + std::to_string(in[v]));
        }
    }

    std::vector<VertexCycle> cycles;
    std::vector<bool> visited(g.vertex_count(), false);
    for (Vertex start = 0; start < g.vertex_count(); ++start) {
        if (visited[start]) continue;
        VertexCycle cycle;
        for (Vertex v = start; !visited[v]; v = g.successors(v).front()) {
            visited[v] = true;
            cycle.vertices.push_back(v);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

// Edge-list text format:
//   n <vertex_count>
//   u v
//   ...
// Blank lines and lines whose first non-blank character is '#' are ignored.

inline Digraph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        if (!have_header) {
            std::string tag;
            long long n = -1;
            if (!(fields >> tag >> n) || tag != "n" || n < 0) {
                throw parse_error("expected header 'n <vertex_count>'", line_no);
            }
            std::string extra;
            if (fields >> extra) throw parse_error("trailing text after header", line_no);
            vertex_count = static_cast<std::size_t>(n);
            have_header = true;
            continue;
        }

        long long u = -1;
        long long v = -1;
        if (!(fields >> u >> v)) throw parse_error("expected an edge 'u v'", line_no);
        std::string extra;
        if (fields >> extra) throw parse_error("trailing text after edge", line_no);
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count ||
            static_cast<std::size_t>(v) >= vertex_count) {
            throw parse_error("edge endpoint outside [0, " + std::to_string(vertex_count) + ")", line_no);
        }
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        edge_lines.push_back(line_no);
    }
    if (!have_header) throw parse_error("missing header 'n <vertex_count>'", line_no);

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges[order[i]] == edges[order[i - 1]]) {
            throw parse_error("duplicate edge", edge_lines[order[i]]);
        }
    }
    return Digraph(vertex_count, edges);
}

inline void write_edge_list(std::ostream& out, const Digraph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) out << e.from << ' ' << e.to << '\n';
}

} // namespace subpow

#endif // SUBPOW_DIGRAPH_HPP
