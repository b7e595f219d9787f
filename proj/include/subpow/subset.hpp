#ifndef SUBPOW_SUBSET_HPP
#define SUBPOW_SUBSET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "error.hpp"

namespace subpow {

/// A finite vertex set stored as a strictly increasing member list.
/// Ordering is lexicographic on the member list.
struct SubsetVertex {
    std::vector<Vertex> members;

    SubsetVertex() = default;

    /// Sorts `values`; throws subpow::invalid_argument on repeated members.
    explicit SubsetVertex(std::vector<Vertex> values) : members(std::move(values)) {
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
            throw invalid_argument("subset has repeated members");
        }
    }

    SubsetVertex(std::initializer_list<Vertex> values) : SubsetVertex(std::vector<Vertex>(values)) {}

    std::size_t size() const noexcept { return members.size(); }
    bool empty() const noexcept { return members.empty(); }

    bool contains(Vertex v) const { return std::binary_search(members.begin(), members.end(), v); }

    /// "{a1,a2,...}"
    std::string label() const {
        std::string s = "{";
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(members[i]);
        }
        s += '}';
        return s;
    }

    friend auto operator<=>(const SubsetVertex&, const SubsetVertex&) = default;
    friend bool operator==(const SubsetVertex&, const SubsetVertex&) = default;
};

/// Steps `members` (a strictly increasing d-subset of [0, n)) to its
/// lexicographic successor. Returns false, leaving `members` unspecified,
/// once the last subset has been passed.
inline bool next_subset(std::vector<Vertex>& members, std::size_t n) {
    const std::size_t d = members.size();
    std::size_t i = d;
    while (i > 0) {
        --i;
        if (members[i] < n - d + i) {
            ++members[i];
            for (std::size_t j = i + 1; j < d; ++j) members[j] = members[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// All d-subsets of [0, n) in lexicographic order; a subset's index is its rank.
inline std::vector<SubsetVertex> enumerate_d_subsets(std::size_t n, std::size_t d) {
    std::vector<SubsetVertex> result;
    if (d > n) return result;
    std::vector<Vertex> members(d);
    for (std::size_t i = 0; i < d; ++i) members[i] = static_cast<Vertex>(i);
    do {
        SubsetVertex s;
        s.members = members;
        result.push_back(std::move(s));
    } while (next_subset(members, n));
    return result;
}

/// C(n, r) in 64 bits, saturating at UINT64_MAX.
inline std::uint64_t binomial_u64_saturating(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 value = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        value = value * (n - r + i) / i;
        if (value > max) return max;
    }
    return static_cast<std::uint64_t>(value);
}

/// Lexicographic rank of d-subsets of [0, n) in O(d) table lookups. The
/// (n+1) x (d+1) binomial table is only built when it has at most
/// `max_table_entries` entries; otherwise binomials are computed per query.
/// Only meaningful when C(n, d) fits in 64 bits.
class SubsetRanker {
public:
    static constexpr std::size_t max_table_entries = std::size_t{1} << 22;

    SubsetRanker(std::size_t n, std::size_t d) : n_(n), d_(d) {
        if ((n + 1) * (d + 1) > max_table_entries) return;
        table_.assign((n + 1) * (d + 1), 0);
        constexpr auto max = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t x = 0; x <= n; ++x) {
            table_[x * (d + 1)] = 1;
            for (std::size_t r = 1; r <= std::min(x, d); ++r) {
                const auto a = at(x - 1, r - 1);
                const auto b = at(x - 1, r);
                table_[x * (d + 1) + r] = a > max - b ? max : a + b;
            }
        }
    }

    std::uint64_t count() const { return at(n_, d_); }

    /// Members must be strictly increasing and < n.
    std::uint64_t rank(const std::vector<Vertex>& members) const {
        // Subsets sharing the first i members and with a smaller member at
        // position i: sum over v in [prev+1, c_i) of C(n-1-v, r-1), which
        // telescopes to C(n-prev-1, r) - C(n-c_i, r).
        std::uint64_t result = 0;
        std::size_t lo = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const std::size_t r = d_ - i;
            result += at(n_ - lo, r) - at(n_ - members[i], r);
            lo = members[i] + 1;
        }
        return result;
    }

private:
    std::uint64_t at(std::size_t x, std::size_t r) const {
        if (table_.empty()) return binomial_u64_saturating(x, r);
        return table_[x * (d_ + 1) + r];
    }

    std::size_t n_;
    std::size_t d_;
    std::vector<std::uint64_t> table_;
};

} // namespace subpow

#endif // SUBPOW_SUBSET_HPP
