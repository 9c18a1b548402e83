#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fbopt/errors.hpp"
#include "fbopt/performance.hpp"
#include "fbopt/ranking.hpp"
#include "fbopt/scores.hpp"

namespace fbopt {

/**
 * Value of beta^2 at which F-beta assigns equal values to p1 and p2:
 *
 *   theta = -(PTP1 PFP2 - PTP2 PFP1) / (PTP1 PFN2 - PTP2 PFN1)
 *
 * The numerator vanishes iff the pair ties in precision and the denominator
 * iff it ties in recall (both judged with kTieTolerance on the score values).
 * Returns nullopt when no beta >= 0 equalizes the pair; throws DegeneratePair
 * when every beta does.
 */
inline std::optional<double> theta(const Performance& p1, const Performance& p2) {
    if (p1.ptn >= 1.0 || p2.ptn >= 1.0) {
        throw InvalidArgument("theta requires performances with ptn < 1");
    }
    const double num = p1.ptp * p2.pfp - p2.ptp * p1.pfp;
    const double den = p1.ptp * p2.pfn - p2.ptp * p1.pfn;
    const double num_scale = (p1.pfp + p1.ptp) * (p2.pfp + p2.ptp);
    const double den_scale = (p1.pfn + p1.ptp) * (p2.pfn + p2.ptp);
    const bool num_zero = std::abs(num) <= kTieTolerance * num_scale;
    const bool den_zero = std::abs(den) <= kTieTolerance * den_scale;
    if (num_zero && den_zero) throw DegeneratePair("performances tie for every beta");
    if (den_zero) return std::nullopt;
    if (num_zero) return 0.0;
    const double t = -num / den;
    if (t < 0.0) return std::nullopt;
    return t;
}

/// Median rule over the pairwise equalizers, with its bookkeeping.
struct OptimalBeta {
    std::optional<double> beta_star_squared;
    std::vector<double> thetas;  // sorted pool of theta >= 0
    // Open interval of beta^2 whose tie-free rankings minimize the Frechet variance.
    double interval_lo = 0.0;
    double interval_hi = std::numeric_limits<double>::infinity();
    std::size_t zero_thetas = 0;
    std::size_t degenerate_pairs = 0;
    bool coalesced = false;  // two pool values coincide within tolerance

    std::optional<double> beta_star() const {
        if (!beta_star_squared) return std::nullopt;
        return std::sqrt(*beta_star_squared);
    }
};

inline bool thetas_coincide(double a, double b) {
    return std::abs(a - b) <= kTieTolerance * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

inline std::vector<double> pairwise_thetas(const PerformanceSet& set, std::size_t* degenerate = nullptr) {
    std::vector<double> pool;
    std::size_t skipped = 0;
    const std::size_t n = set.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            try {
                if (auto t = theta(set.items[i], set.items[j])) pool.push_back(*t);
            } catch (const DegeneratePair&) {
                ++skipped;
            }
        }
    }
    std::sort(pool.begin(), pool.end());
    if (degenerate) *degenerate = skipped;
    return pool;
}

inline OptimalBeta optimal_beta(const PerformanceSet& set) {
    if (set.size() < 2) throw InvalidArgument("optimal_beta needs at least two performances");
    OptimalBeta out;
    out.thetas = pairwise_thetas(set, &out.degenerate_pairs);
    const auto& t = out.thetas;
    out.zero_thetas = static_cast<std::size_t>(std::count(t.begin(), t.end(), 0.0));
    for (std::size_t k = 1; k < t.size(); ++k) {
        if (thetas_coincide(t[k - 1], t[k])) out.coalesced = true;
    }
    const std::size_t count = t.size();
    if (count == 0) return out;
    const std::size_t mid = count / 2;
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (count % 2 == 1) {
        out.beta_star_squared = t[mid];
        out.interval_lo = mid >= 1 ? t[mid - 1] : 0.0;
        out.interval_hi = mid + 1 < count ? t[mid + 1] : inf;
    } else {
        out.beta_star_squared = 0.5 * (t[mid - 1] + t[mid]);
        out.interval_lo = t[mid - 1];
        out.interval_hi = t[mid];
    }
    return out;
}

/// Rankings at both ends of the F-beta path, computed once per set.
struct Endpoints {
    Ranking precision;
    Ranking recall;

    static Endpoints of(const PerformanceSet& set) {
        return Endpoints{rank_by_score(set, ScoreFunction::precision()),
                         rank_by_score(set, ScoreFunction::recall())};
    }
};

inline double frechet_variance(const PerformanceSet& set, const Endpoints& ends, double beta) {
    const auto f = rank_by_score(set, ScoreFunction::fbeta(beta));
    const double d1 = kendall_distance(ends.precision, f);
    const double d2 = kendall_distance(f, ends.recall);
    return d1 * d1 + d2 * d2;
}

/// d_tau^2(Pr; F_beta) + d_tau^2(F_beta; Re) on the set.
inline double frechet_variance(const PerformanceSet& set, double beta) {
    return frechet_variance(set, Endpoints::of(set), beta);
}

/// discordant(Pr,Re) - discordant(Pr,F) - discordant(F,Re) for each beta; zero on tie-free sets.
inline std::vector<std::int64_t> geodesic_check(const PerformanceSet& set, std::span<const double> betas) {
    const auto ends = Endpoints::of(set);
    const auto full = static_cast<std::int64_t>(discordance(ends.precision, ends.recall).discordant);
    std::vector<std::int64_t> residuals;
    residuals.reserve(betas.size());
    for (double beta : betas) {
        const auto f = rank_by_score(set, ScoreFunction::fbeta(beta));
        const auto a = static_cast<std::int64_t>(discordance(ends.precision, f).discordant);
        const auto b = static_cast<std::int64_t>(discordance(f, ends.recall).discordant);
        residuals.push_back(full - a - b);
    }
    return residuals;
}

/**
 * Pairwise split of a candidate score against the optimal tradeoff:
 * no choice (precision and recall agree), optimal choice, or not optimal.
 */
struct Optimality {
    std::uint64_t no_choice = 0;
    std::uint64_t optimal = 0;
    std::uint64_t not_optimal = 0;
    std::uint64_t total = 0;
    // Unanimous pairs the candidate orders against both precision and recall.
    std::uint64_t off_geodesic = 0;
    bool vacuous = false;  // precision and recall never contradict; O reported as 1

    double p_no_choice() const { return static_cast<double>(no_choice) / static_cast<double>(total); }
    double p_optimal() const { return static_cast<double>(optimal) / static_cast<double>(total); }
    double p_not_optimal() const { return static_cast<double>(not_optimal) / static_cast<double>(total); }

    double degree() const {
        const auto contradictory = optimal + not_optimal;
        if (contradictory == 0) return 1.0;
        return static_cast<double>(optimal) / static_cast<double>(contradictory);
    }
};

namespace detail {

inline int order(std::size_t ri, std::size_t rj) {
    if (ri == rj) return 0;
    return ri < rj ? 1 : -1;
}

}  // namespace detail

/// Classify every pair given the candidate's ranking and the optimal ranking (nullopt when none).
inline Optimality classify_pairs(const Endpoints& ends, const Ranking& candidate,
                                 const std::optional<Ranking>& optimum) {
    const std::size_t n = candidate.size();
    if (ends.precision.size() != n || ends.recall.size() != n ||
        (optimum && optimum->size() != n)) {
        throw LengthMismatch("rankings have different lengths");
    }
    Optimality o;
    o.total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int pr = detail::order(ends.precision.ranks[i], ends.precision.ranks[j]);
            const int re = detail::order(ends.recall.ranks[i], ends.recall.ranks[j]);
            const int c = detail::order(candidate.ranks[i], candidate.ranks[j]);
            if (pr * re >= 0) {
                ++o.no_choice;
                const int unanimous = pr != 0 ? pr : re;
                if (unanimous != 0 && c == -unanimous) ++o.off_geodesic;
                continue;
            }
            const int opt = optimum ? detail::order(optimum->ranks[i], optimum->ranks[j]) : 0;
            if (c * opt < 0) {
                ++o.not_optimal;
            } else {
                ++o.optimal;
            }
        }
    }
    o.vacuous = (o.optimal + o.not_optimal) == 0;
    return o;
}

inline Optimality optimality_decomposition(const PerformanceSet& set, const ScoreFunction& candidate,
                                           const OptimalBeta& best) {
    const auto ends = Endpoints::of(set);
    const auto cand = rank_by_score(set, candidate);
    std::optional<Ranking> optimum;
    if (best.beta_star_squared) {
        optimum = rank_by_score(set, ScoreFunction::fbeta_squared(*best.beta_star_squared));
    }
    return classify_pairs(ends, cand, optimum);
}

inline Optimality optimality_decomposition(const PerformanceSet& set, const ScoreFunction& candidate) {
    return optimality_decomposition(set, candidate, optimal_beta(set));
}

/// Distribution-level decomposition from the three rank correlations.
struct OptimalityFractions {
    double p_no_choice = 0.0;
    double p_optimal = 0.0;
    double p_not_optimal = 0.0;
    double degree = 1.0;
};

inline OptimalityFractions optimality_from_taus(double tau_pr_f, double tau_f_re, double tau_pr_re) {
    OptimalityFractions o;
    o.p_no_choice = 0.5 * (1.0 + tau_pr_re);
    o.p_not_optimal = 0.25 * std::abs(tau_pr_f - tau_f_re);
    o.p_optimal = 1.0 - o.p_no_choice - o.p_not_optimal;
    const double contradictory = o.p_optimal + o.p_not_optimal;
    o.degree = contradictory > 0.0 ? o.p_optimal / contradictory : 1.0;
    return o;
}

/// beta^2 = E[PFP] / E[PFN] over the set.
inline double heuristic_beta_squared(const PerformanceSet& set) {
    double fp = 0.0, fn = 0.0;
    for (const auto& p : set.items) {
        fp += p.pfp;
        fn += p.pfn;
    }
    if (fn == 0.0) throw ZeroDenominator("no performance in the set has false negatives");
    return fp / fn;
}

inline double heuristic_beta(const PerformanceSet& set) { return std::sqrt(heuristic_beta_squared(set)); }

/// Log-spaced grid in beta augmented with every transition and the geometric midpoints between them.
inline std::vector<double> frechet_beta_grid(const OptimalBeta& best, double lo, double hi, std::size_t points) {
    if (!(lo > 0.0 && hi > lo) || points < 2) throw InvalidArgument("invalid beta grid");
    std::vector<double> betas;
    const double step = std::log(hi / lo) / static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) betas.push_back(lo * std::exp(step * static_cast<double>(k)));
    std::vector<double> transitions;
    for (double t : best.thetas) {
        if (t > 0.0) transitions.push_back(std::sqrt(t));
    }
    for (std::size_t k = 0; k < transitions.size(); ++k) {
        betas.push_back(transitions[k]);
        if (k + 1 < transitions.size()) betas.push_back(std::sqrt(transitions[k] * transitions[k + 1]));
    }
    if (!transitions.empty()) {
        betas.push_back(transitions.front() / 2.0);
        betas.push_back(transitions.back() * 2.0);
    }
    std::sort(betas.begin(), betas.end());
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
    return betas;
}

struct FrechetPoint {
    double beta = 0.0;
    double tau_pr_f = 0.0;
    double tau_f_re = 0.0;
    double variance = 0.0;
};

inline std::vector<FrechetPoint> frechet_curve(const PerformanceSet& set, std::span<const double> betas) {
    const auto ends = Endpoints::of(set);
    std::vector<FrechetPoint> curve;
    curve.reserve(betas.size());
    for (double beta : betas) {
        const auto f = rank_by_score(set, ScoreFunction::fbeta(beta));
        const double d1 = kendall_distance(ends.precision, f);
        const double d2 = kendall_distance(f, ends.recall);
        curve.push_back({beta, 1.0 - 2.0 * d1, 1.0 - 2.0 * d2, d1 * d1 + d2 * d2});
    }
    return curve;
}

struct TradeoffOptions {
    double grid_min = 1e-3;
    double grid_max = 1e3;
    std::size_t grid_points = 200;
    std::vector<double> user_betas;
};

struct CandidateResult {
    std::string name;
    std::optional<double> beta_squared;  // nullopt for scores outside the F-beta family
    Optimality optimality;
};

struct TradeoffReport {
    double tau_pr_re = 0.0;
    Discordance pr_re;
    OptimalBeta best;
    std::optional<double> heuristic_beta_squared;
    std::vector<FrechetPoint> frechet;
    std::vector<CandidateResult> candidates;
    std::vector<std::string> notes;
};

inline TradeoffReport analyze_tradeoff(const PerformanceSet& set, const TradeoffOptions& opt = {}) {
    if (set.size() < 2) throw InvalidArgument("at least two performances are required");
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set.items[i].ptn >= 1.0) throw UndefinedScore(i);
    }
    TradeoffReport rep;
    const auto ends = Endpoints::of(set);
    rep.pr_re = discordance(ends.precision, ends.recall);
    rep.tau_pr_re = kendall_tau(ends.precision, ends.recall);
    rep.best = optimal_beta(set);
    if (rep.best.degenerate_pairs > 0) {
        rep.notes.push_back(std::to_string(rep.best.degenerate_pairs) +
                            " pair(s) tie for every beta and were excluded");
    }
    if (rep.best.coalesced) rep.notes.push_back("coalesced transitions: several pairs share a theta value");

    std::optional<Ranking> optimum;
    if (rep.best.beta_star_squared) {
        optimum = rank_by_score(set, ScoreFunction::fbeta_squared(*rep.best.beta_star_squared));
    }
    auto add = [&](std::string name, const ScoreFunction& score, std::optional<double> b2) {
        try {
            const auto r = rank_by_score(set, score);
            rep.candidates.push_back({std::move(name), b2, classify_pairs(ends, r, optimum)});
        } catch (const UndefinedScore& e) {
            rep.notes.push_back(name + " skipped: " + e.what());
        }
    };
    add("F1", ScoreFunction::f1(), 1.0);
    add("SIVF", ScoreFunction::sivf(), std::nullopt);
    try {
        const double h = heuristic_beta_squared(set);
        rep.heuristic_beta_squared = h;
        add("heuristic", ScoreFunction::fbeta_squared(h), h);
    } catch (const ZeroDenominator& e) {
        rep.notes.push_back(std::string("heuristic skipped: ") + e.what());
    }
    for (double beta : opt.user_betas) {
        add(ScoreFunction::fbeta(beta).name(), ScoreFunction::fbeta(beta), beta * beta);
    }
    if (rep.best.beta_star_squared) {
        add("optimal", ScoreFunction::fbeta_squared(*rep.best.beta_star_squared), *rep.best.beta_star_squared);
    }
    const auto grid = frechet_beta_grid(rep.best, opt.grid_min, opt.grid_max, opt.grid_points);
    rep.frechet = frechet_curve(set, grid);
    return rep;
}

}  // namespace fbopt
