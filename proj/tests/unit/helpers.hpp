#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fbopt/distributions.hpp"
#include "fbopt/ranking.hpp"

namespace fbopt::test {

inline PerformanceSet sample_set(const DistributionSpec& spec, std::uint64_t seed, std::size_t n) {
    return make_set(sample(spec, seed, n));
}

/// Random permutation of 1..n as a ranking.
inline Ranking random_permutation(std::size_t n, std::uint64_t seed) {
    Ranking r;
    r.ranks.resize(n);
    std::iota(r.ranks.begin(), r.ranks.end(), std::size_t{1});
    auto rng = SplitMix64::substream(seed, 0);
    for (std::size_t i = n; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng() % i);
        std::swap(r.ranks[i - 1], r.ranks[j]);
    }
    return r;
}

inline bool set_tie_free(const PerformanceSet& set) {
    return is_tie_free(rank_by_score(set, ScoreFunction::precision())) &&
           is_tie_free(rank_by_score(set, ScoreFunction::recall()));
}

/**
 * Number of ranking changes along F-beta for beta in [lo, hi], found by
 * bisecting any interval whose end rankings differ by more than one swap.
 */
inline std::size_t count_transitions(const PerformanceSet& set, double lo, double hi, const Ranking& r_lo,
                                     const Ranking& r_hi) {
    const auto d = discordance(r_lo, r_hi).discordant;
    if (d <= 1 || hi / lo - 1.0 < 1e-13) return d;
    const double mid = std::sqrt(lo * hi);
    const auto r_mid = rank_by_score(set, ScoreFunction::fbeta(mid));
    return count_transitions(set, lo, mid, r_lo, r_mid) + count_transitions(set, mid, hi, r_mid, r_hi);
}

}  // namespace fbopt::test
