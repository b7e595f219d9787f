#ifndef SUBPOW_ORACLE_HPP
#define SUBPOW_ORACLE_HPP

// Exhaustive ground truth for the cycle structure of C_l^(d): the
// successor of a subset is its shift by one, so the cycles are exactly the
// shift orbits on d-subsets of Z_l.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cycle_structure.hpp"
#include "error.hpp"
#include "subset.hpp"

namespace subpow::oracle {

inline constexpr std::uint64_t default_budget = 10'000'000;

namespace detail {

inline void require_members_below(const SubsetVertex& a, std::uint64_t l) {
    if (l == 0) throw invalid_argument("modulus l must be at least 1");
    if (!a.empty() && a.members.back() >= l) {
        throw invalid_argument("subset " + a.label() + " has a member >= " + std::to_string(l));
    }
}

// Shift by s in [0, l) into `out`, keeping the member list sorted.
inline void shift_into(const std::vector<Vertex>& in, std::uint64_t s, std::uint64_t l, std::vector<Vertex>& out) {
    out.resize(in.size());
    // Members that wrap past l - 1 move to the front, in order.
    const auto split = std::lower_bound(in.begin(), in.end(), static_cast<Vertex>(l - s)) - in.begin();
    std::size_t o = 0;
    for (auto i = static_cast<std::size_t>(split); i < in.size(); ++i) out[o++] = static_cast<Vertex>(in[i] + s - l);
    for (std::size_t i = 0; i < static_cast<std::size_t>(split); ++i) out[o++] = static_cast<Vertex>(in[i] + s);
}

} // namespace detail

/// {x + s mod l : x in a}. Any integer shift is accepted.
inline SubsetVertex shift_subset(const SubsetVertex& a, std::int64_t s, std::uint64_t l) {
    detail::require_members_below(a, l);
    const auto signed_l = static_cast<std::int64_t>(l);
    const auto step = static_cast<std::uint64_t>(((s % signed_l) + signed_l) % signed_l);
    SubsetVertex result;
    detail::shift_into(a.members, step, l, result.members);
    return result;
}

/// Least r >= 1 with a shifted by r equal to a. Always divides l.
inline std::uint64_t orbit_period(const SubsetVertex& a, std::uint64_t l) {
    if (a.empty()) throw invalid_argument("orbit period of the empty subset is undefined");
    detail::require_members_below(a, l);
    std::vector<Vertex> shifted;
    for (std::uint64_t r = 1; r < l; ++r) {
        detail::shift_into(a.members, r, l, shifted);
        if (shifted == a.members) return r;
    }
    return l;
}

/// {x mod m : x in a}; members that collide are merged.
inline SubsetVertex project_mod(const SubsetVertex& a, std::uint64_t m) {
    if (m == 0) throw invalid_argument("projection modulus must be at least 1");
    SubsetVertex result;
    result.members.reserve(a.size());
    for (auto x : a.members) result.members.push_back(static_cast<Vertex>(x % m));
    std::sort(result.members.begin(), result.members.end());
    result.members.erase(std::unique(result.members.begin(), result.members.end()), result.members.end());
    return result;
}

/// One shift orbit: its lexicographically smallest member and its length.
struct OrbitRecord {
    SubsetVertex representative;
    std::uint64_t period = 0;

    friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

/// How the enumeration recognises orbits it has already recorded.
enum class SeenSet {
    automatic,    ///< currently the rank bitset
    rank_bitset,  ///< one bit per subset rank, set for every orbit member
    min_rotation, ///< no bitset: a subset starts an orbit iff it beats all its shifts; O(l) per subset
};

/// All shift orbits on d-subsets of Z_l, ordered by representative.
/// Throws budget_exceeded when C(l, d) > budget.
inline std::vector<OrbitRecord> enumerate_orbits(std::uint64_t l, std::uint64_t d,
                                                 std::uint64_t budget = default_budget,
                                                 SeenSet seen_set = SeenSet::automatic) {
    subpow::detail::require_instance(l, d);
    const auto total = binomial_u64_saturating(l, d);
    if (total > budget) {
        throw budget_exceeded("instance too large for brute force: C(" + std::to_string(l) + ", " + std::to_string(d) +
                              ") exceeds the budget of " + std::to_string(budget) + " subsets");
    }
    if (seen_set == SeenSet::automatic) seen_set = SeenSet::rank_bitset;

    std::vector<OrbitRecord> orbits;
    std::vector<Vertex> current(d);
    for (std::size_t i = 0; i < d; ++i) current[i] = static_cast<Vertex>(i);
    std::vector<Vertex> walker;
    std::vector<Vertex> next;

    if (seen_set == SeenSet::rank_bitset) {
        const SubsetRanker ranker(l, d);
        std::vector<bool> seen(total, false);
        std::uint64_t rank = 0;
        do {
            if (!seen[rank]) {
                std::uint64_t period = 0;
                walker = current;
                do {
                    seen[ranker.rank(walker)] = true;
                    ++period;
                    detail::shift_into(walker, 1, l, next);
                    std::swap(walker, next);
                } while (walker != current);
                SubsetVertex rep;
                rep.members = current;
                orbits.push_back({std::move(rep), period});
            }
            ++rank;
        } while (next_subset(current, l));
    } else {
        do {
            bool is_min = true;
            std::uint64_t period = l;
            for (std::uint64_t r = 1; r < l; ++r) {
                detail::shift_into(current, r, l, walker);
                if (walker == current) {
                    period = r;
                    break;
                }
                if (walker < current) {
                    is_min = false;
                    break;
                }
            }
            if (is_min) {
                SubsetVertex rep;
                rep.members = current;
                orbits.push_back({std::move(rep), period});
            }
        } while (next_subset(current, l));
    }
    return orbits;
}

/// counts[k] = number of shift orbits of length k.
inline CycleSpectrum brute_force_spectrum(std::uint64_t l, std::uint64_t d, std::uint64_t budget = default_budget,
                                          SeenSet seen_set = SeenSet::automatic) {
    CycleSpectrum result{l, d, {}};
    for (const auto& orbit : enumerate_orbits(l, d, budget, seen_set)) ++result.counts[orbit.period];
    return result;
}

} // namespace subpow::oracle

#endif // SUBPOW_ORACLE_HPP
