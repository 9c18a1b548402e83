#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fbopt/errors.hpp"
#include "fbopt/performance.hpp"
#include "fbopt/random.hpp"
#include "fbopt/scores.hpp"

namespace fbopt {

/**
 * The five families of performance distributions:
 *   Pi1        uniform over all performances
 *   Pi2(ptn)   uniform with a fixed probability of true negatives
 *   Pi3(pi+)   uniform with fixed class priors (uniform in ROC)
 *   Pi4(pi+)   Pi3 restricted to TPR >= FPR
 *   Pi5(pi+)   Pi3 restricted to FPR < pi+ < TPR
 */
enum class Family { Pi1, Pi2, Pi3, Pi4, Pi5 };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Pi1: return "pi1";
        case Family::Pi2: return "pi2";
        case Family::Pi3: return "pi3";
        case Family::Pi4: return "pi4";
        case Family::Pi5: return "pi5";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    for (auto f : {Family::Pi1, Family::Pi2, Family::Pi3, Family::Pi4, Family::Pi5}) {
        if (family_name(f) == s) return f;
    }
    throw InvalidArgument("unknown distribution family '" + s + "'");
}

class DistributionSpec {
public:
    static DistributionSpec pi1() { return DistributionSpec(Family::Pi1, 0.0); }

    static DistributionSpec pi2(double ptn) {
        if (!(ptn >= 0.0 && ptn < 1.0)) throw InvalidArgument("pi2 requires ptn in [0, 1)");
        return DistributionSpec(Family::Pi2, ptn);
    }

    static DistributionSpec with_prior(Family f, double prior_pos) {
        if (f == Family::Pi1 || f == Family::Pi2) {
            throw InvalidArgument("family " + family_name(f) + " has no class-prior parameter");
        }
        if (!(prior_pos > 0.0 && prior_pos < 1.0)) {
            throw InvalidArgument(family_name(f) + " requires prior_pos in (0, 1)");
        }
        return DistributionSpec(f, prior_pos);
    }

    static DistributionSpec pi3(double prior_pos) { return with_prior(Family::Pi3, prior_pos); }
    static DistributionSpec pi4(double prior_pos) { return with_prior(Family::Pi4, prior_pos); }
    static DistributionSpec pi5(double prior_pos) { return with_prior(Family::Pi5, prior_pos); }

    /// Build from a family and an optional parameter, as given on the command line.
    static DistributionSpec make(Family f, std::optional<double> param) {
        switch (f) {
            case Family::Pi1:
                if (param) throw InvalidArgument("pi1 takes no parameter");
                return pi1();
            case Family::Pi2:
                if (!param) throw InvalidArgument("pi2 requires --param <ptn>");
                return pi2(*param);
            default:
                if (!param) throw InvalidArgument(family_name(f) + " requires --param <prior_pos>");
                return with_prior(f, *param);
        }
    }

    Family family() const noexcept { return family_; }
    bool has_prior() const noexcept { return family_ != Family::Pi1 && family_ != Family::Pi2; }
    double ptn() const noexcept { return family_ == Family::Pi2 ? param_ : 0.0; }
    double prior_pos() const noexcept { return has_prior() ? param_ : 0.0; }
    double param() const noexcept { return param_; }

    std::string name() const {
        if (family_ == Family::Pi1) return "pi1";
        return family_name(family_) + "(" + std::to_string(param_) + ")";
    }

private:
    DistributionSpec(Family f, double param) : family_(f), param_(param) {}

    Family family_;
    double param_;
};

/// One draw. Rejection for Pi4 consumes extra variates from the same stream.
inline Performance draw(const DistributionSpec& spec, SplitMix64& rng) {
    switch (spec.family()) {
        case Family::Pi1: {
            const double e0 = rng.exponential(), e1 = rng.exponential();
            const double e2 = rng.exponential(), e3 = rng.exponential();
            const double s = e0 + e1 + e2 + e3;
            return Performance{e0 / s, e1 / s, e2 / s, e3 / s};
        }
        case Family::Pi2: {
            const double rest = 1.0 - spec.ptn();
            const double e1 = rng.exponential(), e2 = rng.exponential(), e3 = rng.exponential();
            const double s = e1 + e2 + e3;
            return Performance{spec.ptn(), rest * e1 / s, rest * e2 / s, rest * e3 / s};
        }
        case Family::Pi3: {
            const double fpr = rng.uniform();
            const double tpr = rng.uniform();
            return Performance::from_roc(fpr, tpr, spec.prior_pos());
        }
        case Family::Pi4: {
            for (;;) {
                const double fpr = rng.uniform();
                const double tpr = rng.uniform();
                if (tpr >= fpr) return Performance::from_roc(fpr, tpr, spec.prior_pos());
            }
        }
        case Family::Pi5: {
            const double p = spec.prior_pos();
            const double fpr = p * rng.uniform();
            const double tpr = p + (1.0 - p) * rng.uniform_open_low();
            return Performance::from_roc(fpr, tpr, p);
        }
    }
    throw InvalidArgument("unknown family");
}

inline std::vector<Performance> sample(const DistributionSpec& spec, std::uint64_t seed, std::size_t count) {
    if (count < 1) throw InvalidArgument("sample count must be at least 1");
    std::vector<Performance> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        auto rng = SplitMix64::substream(seed, k);
        out.push_back(draw(spec, rng));
    }
    return out;
}

inline bool satisfies_family(const DistributionSpec& spec, const Performance& p, double tol = 1e-12) {
    if (!p.is_valid()) return false;
    switch (spec.family()) {
        case Family::Pi1: return true;
        case Family::Pi2: return std::abs(p.ptn - spec.ptn()) <= tol;
        case Family::Pi3: return std::abs(p.prior_pos() - spec.prior_pos()) <= tol;
        case Family::Pi4:
            return std::abs(p.prior_pos() - spec.prior_pos()) <= tol &&
                   p.ptp / p.prior_pos() >= p.pfp / p.prior_neg() - tol;
        case Family::Pi5: {
            const double pi = spec.prior_pos();
            return std::abs(p.prior_pos() - pi) <= tol && p.pfp / p.prior_neg() < pi &&
                   p.ptp / p.prior_pos() > pi;
        }
    }
    return false;
}

/// Monte Carlo estimate with a 95% half-width.
struct McEstimate {
    double value = 0.0;
    double half_width = 0.0;
    std::uint64_t n_pairs = 0;
    std::uint64_t seed = 0;
    std::uint64_t redraws = 0;
};

struct McOptions {
    unsigned workers = 1;
    double max_redraw_fraction = 0.01;
    unsigned max_attempts_per_pair = 1000;
};

namespace detail {

inline bool strictly_ordered(double a, double b) { return std::abs(a - b) > kTieTolerance; }

/**
 * Runs `classify(a, b)` over n_pairs independent pairs. It returns an outcome
 * index in [0, Outcomes) or -1 to request a redraw. Pair k always draws from
 * substream (seed, k), so the counts do not depend on the worker count.
 */
template <std::size_t Outcomes, class Classify>
std::vector<std::uint64_t> run_pairs(const DistributionSpec& spec, std::uint64_t n_pairs, std::uint64_t seed,
                                     const McOptions& opt, Classify classify, std::uint64_t* redraws_out) {
    if (n_pairs < 1) throw InvalidArgument("n_pairs must be at least 1");
    const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, 64));
    std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(Outcomes, 0));
    std::vector<std::uint64_t> redraws(workers, 0);
    std::vector<int> failed(workers, 0);

    auto work = [&](unsigned w) {
        const std::uint64_t begin = n_pairs * w / workers;
        const std::uint64_t end = n_pairs * (w + 1) / workers;
        for (std::uint64_t k = begin; k < end; ++k) {
            auto rng = SplitMix64::substream(seed, k);
            unsigned attempts = 0;
            for (;;) {
                const auto a = draw(spec, rng);
                const auto b = draw(spec, rng);
                const int outcome = classify(a, b);
                if (outcome >= 0) {
                    ++counts[w][static_cast<std::size_t>(outcome)];
                    break;
                }
                ++redraws[w];
                if (++attempts >= opt.max_attempts_per_pair) {
                    failed[w] = 1;
                    return;
                }
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    std::vector<std::uint64_t> total(Outcomes, 0);
    std::uint64_t total_redraws = 0;
    for (unsigned w = 0; w < workers; ++w) {
        if (failed[w]) throw NonConvergence("a pair could not be drawn with both scores defined and untied");
        for (std::size_t o = 0; o < Outcomes; ++o) total[o] += counts[w][o];
        total_redraws += redraws[w];
    }
    if (static_cast<double>(total_redraws) > opt.max_redraw_fraction * static_cast<double>(n_pairs)) {
        throw NonConvergence("more than " + std::to_string(opt.max_redraw_fraction * 100.0) +
                             "% of pairs had to be redrawn");
    }
    if (redraws_out) *redraws_out = total_redraws;
    return total;
}

}  // namespace detail

/**
 * Kendall's tau between two scores under a distribution, estimated through
 * tau = 1 - 4 P[s1(A) < s1(B), s2(A) > s2(B)] over independent pairs (A, B).
 */
inline McEstimate mc_tau(const DistributionSpec& spec, const ScoreFunction& s1, const ScoreFunction& s2,
                         std::uint64_t n_pairs, std::uint64_t seed, const McOptions& opt = {}) {
    auto classify = [&](const Performance& a, const Performance& b) -> int {
        const auto a1 = evaluate(s1, a), b1 = evaluate(s1, b);
        const auto a2 = evaluate(s2, a), b2 = evaluate(s2, b);
        if (!a1 || !b1 || !a2 || !b2) return -1;
        if (!detail::strictly_ordered(*a1, *b1) || !detail::strictly_ordered(*a2, *b2)) return -1;
        return (*a1 < *b1 && *a2 > *b2) ? 1 : 0;
    };
    std::uint64_t redraws = 0;
    const auto counts = detail::run_pairs<2>(spec, n_pairs, seed, opt, classify, &redraws);
    const double p = static_cast<double>(counts[1]) / static_cast<double>(n_pairs);
    McEstimate est;
    est.value = 1.0 - 4.0 * p;
    est.half_width = 1.96 * 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n_pairs));
    est.n_pairs = n_pairs;
    est.seed = seed;
    est.redraws = redraws;
    return est;
}

/// Pair counts for the no-choice / optimal / not-optimal split of a candidate against a reference optimum.
struct McOptimality {
    std::uint64_t no_choice = 0;
    std::uint64_t optimal = 0;
    std::uint64_t not_optimal = 0;
    std::uint64_t n_pairs = 0;

    double degree() const {
        const auto c = optimal + not_optimal;
        return c ? static_cast<double>(optimal) / static_cast<double>(c) : 1.0;
    }
    /// 95% half-width of the binomial proportion over contradictory pairs.
    double half_width() const {
        const auto c = optimal + not_optimal;
        if (!c) return 0.0;
        const double o = degree();
        return 1.96 * std::sqrt(o * (1.0 - o) / static_cast<double>(c));
    }
};

inline McOptimality mc_optimality(const DistributionSpec& spec, const ScoreFunction& candidate,
                                  const ScoreFunction& optimum, std::uint64_t n_pairs, std::uint64_t seed,
                                  const McOptions& opt = {}) {
    const auto pr = ScoreFunction::precision();
    const auto re = ScoreFunction::recall();
    auto classify = [&](const Performance& a, const Performance& b) -> int {
        const ScoreFunction* scores[4] = {&pr, &re, &candidate, &optimum};
        int sign[4];
        for (int s = 0; s < 4; ++s) {
            const auto va = evaluate(*scores[s], a), vb = evaluate(*scores[s], b);
            if (!va || !vb || !detail::strictly_ordered(*va, *vb)) return -1;
            sign[s] = *va < *vb ? -1 : 1;
        }
        if (sign[0] == sign[1]) return 0;
        return sign[2] == sign[3] ? 1 : 2;
    };
    const auto counts = detail::run_pairs<3>(spec, n_pairs, seed, opt, classify, nullptr);
    return McOptimality{counts[0], counts[1], counts[2], n_pairs};
}

}  // namespace fbopt
