#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fbopt/errors.hpp"
#include "fbopt/performance.hpp"
#include "fbopt/scores.hpp"

namespace fbopt {

/// Rank vector over a performance set; rank 1 is the best.
struct Ranking {
    std::vector<std::size_t> ranks;

    std::size_t size() const noexcept { return ranks.size(); }
    friend bool operator==(const Ranking&, const Ranking&) = default;
};

/// Score values of every item; throws UndefinedScore on the first item outside the domain.
inline std::vector<double> score_values(const PerformanceSet& set, const ScoreFunction& score) {
    std::vector<double> values;
    values.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto v = evaluate(score, set.items[i]);
        if (!v) throw UndefinedScore(i);
        values.push_back(*v);
    }
    return values;
}

/**
 * rank(i) = #{ j : value(j) >= value(i) }. Values within kTieTolerance are
 * equal, so tied items share the worst rank of their group.
 */
inline Ranking rank_values(std::span<const double> values) {
    const std::size_t n = values.size();
    Ranking r;
    r.ranks.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t count = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (values[j] >= values[i] - kTieTolerance) ++count;
        }
        r.ranks[i] = count;
    }
    return r;
}

inline Ranking rank_by_score(const PerformanceSet& set, const ScoreFunction& score) {
    const auto values = score_values(set, score);
    return rank_values(values);
}

/// True when no two items share a rank.
inline bool is_tie_free(const Ranking& r) {
    std::vector<bool> seen(r.size() + 1, false);
    for (auto x : r.ranks) {
        if (x == 0 || x > r.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

struct Discordance {
    std::uint64_t discordant = 0;
    std::uint64_t total = 0;
};

/// Pairs ordered oppositely by the two rankings. Pairs tied in either count as agreeing.
inline Discordance discordance(const Ranking& r1, const Ranking& r2) {
    if (r1.size() != r2.size()) throw LengthMismatch("rankings have different lengths");
    const std::size_t n = r1.size();
    if (n < 2) throw InvalidArgument("at least two items are needed for pairwise statistics");
    Discordance d;
    d.total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto a1 = r1.ranks[i], b1 = r1.ranks[j];
            const auto a2 = r2.ranks[i], b2 = r2.ranks[j];
            if (a1 == b1 || a2 == b2) continue;
            if ((a1 < b1) != (a2 < b2)) ++d.discordant;
        }
    }
    return d;
}

inline double kendall_distance(const Ranking& r1, const Ranking& r2) {
    const auto d = discordance(r1, r2);
    return static_cast<double>(d.discordant) / static_cast<double>(d.total);
}

inline double kendall_tau(const Ranking& r1, const Ranking& r2) {
    const auto d = discordance(r1, r2);
    // 1 - 2 D / T computed on integers first
    const auto num = static_cast<std::int64_t>(d.total) - 2 * static_cast<std::int64_t>(d.discordant);
    return static_cast<double>(num) / static_cast<double>(d.total);
}

/// Euclidean distance between rank vectors.
inline double spearman_distance(const Ranking& r1, const Ranking& r2) {
    if (r1.size() != r2.size()) throw LengthMismatch("rankings have different lengths");
    double sum = 0.0;
    for (std::size_t i = 0; i < r1.size(); ++i) {
        const double d = static_cast<double>(r1.ranks[i]) - static_cast<double>(r2.ranks[i]);
        sum += d * d;
    }
    return std::sqrt(sum);
}

}  // namespace fbopt
