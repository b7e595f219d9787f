#ifndef SUBPOW_CYCLE_STRUCTURE_HPP
#define SUBPOW_CYCLE_STRUCTURE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "subset.hpp"

namespace subpow {

/// Exact non-negative integer used for every cycle count.
using Natural = boost::multiprecision::cpp_int;

namespace detail {

inline void require_instance(std::uint64_t l, std::uint64_t d) {
    if (l == 0) throw invalid_argument("cycle length l must be at least 1");
    if (d == 0) throw invalid_argument("subset size d must be at least 1");
    if (d > l) {
        throw invalid_argument("subset size d = " + std::to_string(d) + " exceeds cycle length l = " +
                               std::to_string(l));
    }
}

inline void require_triple(std::uint64_t l, std::uint64_t d, std::uint64_t k) {
    require_instance(l, d);
    if (k == 0) throw invalid_argument("cycle length k must be at least 1");
    if (k > l) {
        throw invalid_argument("cycle length k = " + std::to_string(k) + " exceeds l = " + std::to_string(l));
    }
}

// Broken internal arithmetic, never a property of the caller's input.
inline void check_internal(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

} // namespace detail

/// k | l and l | dk.
inline bool satisfies_divisibility(std::uint64_t l, std::uint64_t d, std::uint64_t k) {
    detail::require_triple(l, d, k);
    if (l % k != 0) return false;
    // l | dk  <=>  (l / gcd(l, k)) | d, which cannot overflow.
    return d % (l / std::gcd(l, k)) == 0;
}

/// True iff C_l^(d) has at least one k-cycle: k | l and l | dk, except
/// that for d = l the single vertex (the full set) only carries a loop,
/// so there k must be 1.
inline bool exists_cycle(std::uint64_t l, std::uint64_t d, std::uint64_t k) {
    if (!satisfies_divisibility(l, d, k)) return false;
    return d < l || k == 1;
}

/// The equivalent instance C_k^(t) whose k-cycles are in bijection with
/// those of C_l^(d): t = dk/l and c = l/k, so k*c = l and t*c = d.
struct ReducedInstance {
    std::uint64_t k = 0;
    std::uint64_t t = 0;
    std::uint64_t c = 0;

    friend bool operator==(const ReducedInstance&, const ReducedInstance&) = default;
};

inline ReducedInstance reduce_instance(std::uint64_t l, std::uint64_t d, std::uint64_t k) {
    if (!satisfies_divisibility(l, d, k)) {
        throw invalid_argument("(l, d, k) = (" + std::to_string(l) + ", " + std::to_string(d) + ", " +
                               std::to_string(k) + ") violates k | l and l | dk");
    }
    const std::uint64_t c = l / k;
    return {k, d / c, c};
}

/// An explicit k-cycle of C_l^(d). The first subset is
/// { i + j*k : 0 <= i < t, 0 <= j < c }, and each following subset is the
/// previous one shifted by 1 modulo l.
inline std::vector<SubsetVertex> canonical_cycle(std::uint64_t l, std::uint64_t d, std::uint64_t k) {
    if (!exists_cycle(l, d, k)) {
        throw invalid_argument("C_" + std::to_string(l) + "^(" + std::to_string(d) + ") has no " + std::to_string(k) +
                               "-cycle");
    }
    const auto [rk, t, c] = reduce_instance(l, d, k);
    std::vector<Vertex> first;
    first.reserve(d);
    for (std::uint64_t j = 0; j < c; ++j) {
        for (std::uint64_t i = 0; i < t; ++i) first.push_back(static_cast<Vertex>(i + j * rk));
    }

    std::vector<SubsetVertex> cycle;
    cycle.reserve(rk);
    for (std::uint64_t s = 0; s < rk; ++s) {
        std::vector<Vertex> shifted(first.size());
        for (std::size_t m = 0; m < first.size(); ++m) shifted[m] = static_cast<Vertex>((first[m] + s) % l);
        cycle.emplace_back(std::move(shifted));
    }
    return cycle;
}

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; empty for 1.
struct Factorization {
    std::vector<PrimePower> factors;

    std::uint64_t value() const {
        std::uint64_t v = 1;
        for (const auto& f : factors) {
            for (unsigned e = 0; e < f.exponent; ++e) v *= f.prime;
        }
        return v;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division up to sqrt(n).
inline Factorization factorize(std::uint64_t n) {
    if (n == 0) throw invalid_argument("cannot factorize 0");
    Factorization result;
    for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        PrimePower pp{p, 0};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
        }
        result.factors.push_back(pp);
    }
    if (n > 1) result.factors.push_back({n, 1});
    return result;
}

struct SquarefreeTerm {
    std::uint64_t product = 1;
    int parity = 1; ///< (-1)^(number of primes in the product)

    friend bool operator==(const SquarefreeTerm&, const SquarefreeTerm&) = default;
};

/// One term per subset S of the distinct primes of `f`: the product of the
/// primes in S and (-1)^|S|. Terms are listed in bitmask order of S.
inline std::vector<SquarefreeTerm> squarefree_terms(const Factorization& f) {
    const std::size_t m = f.factors.size();
    if (m >= 64) throw invalid_argument("too many distinct primes");
    std::vector<SquarefreeTerm> terms;
    terms.reserve(std::size_t{1} << m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        SquarefreeTerm term;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1U) {
                term.product *= f.factors[i].prime;
                term.parity = -term.parity;
            }
        }
        terms.push_back(term);
    }
    return terms;
}

/// Exact C(n, r); zero when r > n.
inline Natural binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    Natural value = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        value *= n - r + i;
        value /= i;
    }
    return value;
}

/// n(l, d, k): the number of k-cycles in C_l^(d). Zero unless k | l and
/// l | dk; otherwise an inclusion-exclusion over the squarefree divisors
/// of gcd(k, t) with t = dk/l:
///
///   n = (1/t) * sum_S (-1)^|S| * C(k/P_S - 1, t/P_S - 1)
///
/// For d = l, k > 1 every term is C(x, x) = 1 and the alternating sum
/// vanishes, matching exists_cycle.
inline Natural count_cycles(std::uint64_t l, std::uint64_t d, std::uint64_t k) {
    if (!satisfies_divisibility(l, d, k)) return 0;
    const auto reduced = reduce_instance(l, d, k);
    const auto k0 = reduced.k;
    const auto t = reduced.t;

    Natural sum = 0;
    for (const auto& term : squarefree_terms(factorize(std::gcd(k0, t)))) {
        const auto c = binomial(k0 / term.product - 1, t / term.product - 1);
        if (term.parity > 0) {
            sum += c;
        } else {
            sum -= c;
        }
    }
    detail::check_internal(sum >= 0, "inclusion-exclusion sum is negative");
    detail::check_internal(sum % t == 0, "inclusion-exclusion sum is not divisible by t");
    return sum / t;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small;
    std::vector<std::uint64_t> large;
    for (std::uint64_t a = 1; a <= n / a; ++a) {
        if (n % a != 0) continue;
        small.push_back(a);
        if (a != n / a) large.push_back(n / a);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace detail {

// mu(n) by trial division, kept separate from factorize().
inline int mobius(std::uint64_t n) {
    int mu = 1;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

} // namespace detail

/// Aperiodic t-of-k necklaces via Moebius summation:
/// (1/k) * sum_{a | gcd(k, t)} mu(a) * C(k/a, t/a). Equals count_cycles(k, t, k).
inline Natural mobius_count(std::uint64_t k, std::uint64_t t) {
    if (k == 0 || t == 0) throw invalid_argument("k and t must be at least 1");
    if (t > k) throw invalid_argument("t = " + std::to_string(t) + " exceeds k = " + std::to_string(k));
    const auto g = std::gcd(k, t);
    Natural sum = 0;
    for (const auto a : divisors(g)) {
        const int mu = detail::mobius(a);
        if (mu > 0) {
            sum += binomial(k / a, t / a);
        } else if (mu < 0) {
            sum -= binomial(k / a, t / a);
        }
    }
    detail::check_internal(sum >= 0 && sum % k == 0, "Moebius sum is not a non-negative multiple of k");
    return sum / k;
}

/// Cycle-length multiset of C_l^(d): k -> n(l, d, k), nonzero entries only.
struct CycleSpectrum {
    std::uint64_t l = 0;
    std::uint64_t d = 0;
    std::map<std::uint64_t, Natural> counts;

    /// sum_k k * counts[k], which equals C(l, d).
    Natural vertex_total() const {
        Natural total = 0;
        for (const auto& [k, n] : counts) total += n * k;
        return total;
    }

    friend bool operator==(const CycleSpectrum&, const CycleSpectrum&) = default;
};

inline CycleSpectrum spectrum(std::uint64_t l, std::uint64_t d) {
    detail::require_instance(l, d);
    CycleSpectrum result{l, d, {}};
    for (const auto k : divisors(l)) {
        auto n = count_cycles(l, d, k);
        if (n != 0) result.counts.emplace(k, std::move(n));
    }
    return result;
}

} // namespace subpow

#endif // SUBPOW_CYCLE_STRUCTURE_HPP
