#ifndef SUBPOW_SUBSET_POWER_HPP
#define SUBPOW_SUBSET_POWER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"
#include "subset.hpp"

namespace subpow {

namespace detail {

// Kuhn's augmenting-path search over the |a| x |b| admissibility matrix.
class SubsetMatcher {
public:
    SubsetMatcher(const Digraph& g, const SubsetVertex& a, const SubsetVertex& b)
        : size_(a.size()), admissible_(size_ * size_, false), match_of_right_(size_, npos) {
        for (std::size_t i = 0; i < size_; ++i) {
            for (std::size_t j = 0; j < size_; ++j) {
                admissible_[i * size_ + j] = g.has_edge(a.members[i], b.members[j]);
            }
        }
    }

    bool perfect() {
        for (std::size_t left = 0; left < size_; ++left) {
            visited_.assign(size_, false);
            if (!augment(left)) return false;
        }
        return true;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool augment(std::size_t left) {
        for (std::size_t right = 0; right < size_; ++right) {
            if (!admissible_[left * size_ + right] || visited_[right]) continue;
            visited_[right] = true;
            if (match_of_right_[right] == npos || augment(match_of_right_[right])) {
                match_of_right_[right] = left;
                return true;
            }
        }
        return false;
    }

    std::size_t size_;
    std::vector<bool> admissible_;
    std::vector<std::size_t> match_of_right_;
    std::vector<bool> visited_;
};

} // namespace detail

/// True iff the members of `a` and `b` can be paired so that every pair
/// (x, y) is an edge x -> y of `g`. A == B is permitted.
inline bool edge_exists(const Digraph& g, const SubsetVertex& a, const SubsetVertex& b) {
    if (a.size() != b.size()) {
        throw invalid_argument("subset sizes differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
    for (const auto* s : {&a, &b}) {
        if (!s->empty() && s->members.back() >= g.vertex_count()) {
            throw invalid_argument("subset " + s->label() + " is not contained in the vertex set");
        }
    }
    return detail::SubsetMatcher(g, a, b).perfect();
}

/// G^(d): vertices are the d-subsets of the base vertex set in lexicographic
/// order, and `graph` is the digraph over their indices.
struct SubsetPowerGraph {
    Digraph base;
    std::size_t d = 0;
    std::vector<SubsetVertex> vertices;
    Digraph graph;

    /// Index of `s` in `vertices`, if present.
    std::optional<std::size_t> index_of(const SubsetVertex& s) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
        if (it == vertices.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }
};

enum class BuildStrategy {
    automatic, ///< successor fast path when every base vertex has out-degree 1
    matching,  ///< pairwise matching test on every ordered pair of subsets
};

inline bool has_uniform_out_degree_one(const Digraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) != 1) return false;
    }
    return true;
}

inline SubsetPowerGraph build_subset_power(const Digraph& g, std::size_t d,
                                           BuildStrategy strategy = BuildStrategy::automatic) {
    const std::size_t n = g.vertex_count();
    if (d == 0) throw invalid_argument("subset size d must be at least 1");
    if (d > n) {
        throw invalid_argument("subset size d = " + std::to_string(d) + " exceeds the vertex count " +
                               std::to_string(n));
    }

    SubsetPowerGraph power;
    power.base = g;
    power.d = d;
    power.vertices = enumerate_d_subsets(n, d);
    const auto& vertices = power.vertices;

    std::vector<Edge> edges;
    if (strategy == BuildStrategy::automatic && has_uniform_out_degree_one(g)) {
        // With a single successor per vertex the only candidate is the image set.
        std::vector<Vertex> image(d);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (std::size_t m = 0; m < d; ++m) image[m] = g.successors(vertices[i].members[m]).front();
            std::sort(image.begin(), image.end());
            if (std::adjacent_find(image.begin(), image.end()) != image.end()) continue;
            SubsetVertex target;
            target.members = image;
            const auto j = power.index_of(target);
            edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(*j)});
        }
    } else {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (std::size_t j = 0; j < vertices.size(); ++j) {
                if (detail::SubsetMatcher(g, vertices[i], vertices[j]).perfect()) {
                    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
                }
            }
        }
    }
    power.graph = Digraph(vertices.size(), edges);
    return power;
}

} // namespace subpow

#endif // SUBPOW_SUBSET_POWER_HPP
