#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fbopt/errors.hpp"
#include "fbopt/ranking.hpp"
#include "fbopt/tradeoff.hpp"

namespace fbopt {

/// Discrete path of rankings visited by F-beta as beta sweeps [0, inf).
struct RankingPath {
    std::vector<double> transition_betas;  // sorted, one per distinct theta > 0
    std::vector<std::size_t> swaps_per_transition;  // >1 when transitions coalesce
    std::vector<double> probe_betas;       // one beta inside each plateau
    std::vector<Ranking> rankings;         // one per plateau
    std::vector<std::uint64_t> discordant_from_precision;
    std::uint64_t total_pairs = 0;
    bool coalesced = false;

    std::size_t plateaus() const noexcept { return rankings.size(); }

    double distance_from_precision(std::size_t k) const {
        return static_cast<double>(discordant_from_precision[k]) / static_cast<double>(total_pairs);
    }

    /// Lower / upper beta bound of plateau k.
    double plateau_lo(std::size_t k) const { return k == 0 ? 0.0 : transition_betas[k - 1]; }
    double plateau_hi(std::size_t k) const {
        return k < transition_betas.size() ? transition_betas[k] : std::numeric_limits<double>::infinity();
    }

    /// Plateau whose distance from precision is nearest to half the full distance (first on ties).
    std::size_t middle_plateau() const {
        const double half = 0.5 * static_cast<double>(discordant_from_precision.back());
        std::size_t best = 0;
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < plateaus(); ++k) {
            const double g = std::abs(static_cast<double>(discordant_from_precision[k]) - half);
            if (g < gap) {
                gap = g;
                best = k;
            }
        }
        return best;
    }
};

inline RankingPath build_path(const PerformanceSet& set) {
    if (set.size() < 2) throw InvalidArgument("a path needs at least two performances");
    const auto ends = Endpoints::of(set);
    if (!is_tie_free(ends.precision) || !is_tie_free(ends.recall)) {
        throw InvalidArgument("the performance set has ties under precision or recall");
    }
    RankingPath path;
    std::vector<double> positive;
    for (double t : pairwise_thetas(set)) {
        if (t > 0.0) positive.push_back(t);
    }
    for (std::size_t k = 0; k < positive.size(); ++k) {
        if (k > 0 && thetas_coincide(positive[k - 1], positive[k])) {
            ++path.swaps_per_transition.back();
            path.coalesced = true;
            continue;
        }
        path.transition_betas.push_back(std::sqrt(positive[k]));
        path.swaps_per_transition.push_back(1);
    }
    const auto& tb = path.transition_betas;
    path.probe_betas.push_back(0.0);
    for (std::size_t k = 1; k < tb.size(); ++k) path.probe_betas.push_back(std::sqrt(tb[k - 1] * tb[k]));
    if (!tb.empty()) path.probe_betas.push_back(2.0 * tb.back());

    path.total_pairs = static_cast<std::uint64_t>(set.size()) * (set.size() - 1) / 2;
    for (std::size_t k = 0; k < path.probe_betas.size(); ++k) {
        auto r = k == 0 ? ends.precision : rank_by_score(set, ScoreFunction::fbeta(path.probe_betas[k]));
        path.discordant_from_precision.push_back(discordance(ends.precision, r).discordant);
        path.rankings.push_back(std::move(r));
    }
    if (!(path.rankings.back() == ends.recall)) {
        throw Error("the last plateau does not reproduce the recall ranking");
    }
    return path;
}

struct PcaProjection {
    std::vector<std::array<double, 2>> coords;
    std::array<double, 2> explained_variance_ratio{0.0, 0.0};
};

/**
 * Two-component PCA of rank vectors (one row per ranking). Columns are
 * centered; each principal direction is oriented so that its first nonzero
 * loading is positive.
 */
inline PcaProjection pca_project(std::span<const Ranking> rows) {
    if (rows.empty()) throw DegenerateSpread("no rankings to project");
    const auto m = static_cast<Eigen::Index>(rows.size());
    const auto n = static_cast<Eigen::Index>(rows.front().size());
    Eigen::MatrixXd x(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
            throw LengthMismatch("rankings have different lengths");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            x(i, j) = static_cast<double>(rows[static_cast<std::size_t>(i)].ranks[static_cast<std::size_t>(j)]);
        }
    }
    x.rowwise() -= x.colwise().mean();
    const double denom = m > 1 ? static_cast<double>(m - 1) : 1.0;
    const Eigen::MatrixXd cov = (x.transpose() * x) / denom;
    const double total = cov.trace();
    if (!(total > 0.0)) throw DegenerateSpread("all rankings are identical");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
    if (eig.info() != Eigen::Success) throw NonConvergence("eigendecomposition failed");
    // eigenvalues come in increasing order
    PcaProjection out;
    Eigen::MatrixXd basis(n, 2);
    for (int c = 0; c < 2; ++c) {
        const Eigen::Index idx = n - 1 - c;
        Eigen::VectorXd v = idx >= 0 ? Eigen::VectorXd(eig.eigenvectors().col(idx)) : Eigen::VectorXd::Zero(n);
        for (Eigen::Index j = 0; j < n; ++j) {
            if (std::abs(v(j)) > 1e-12) {
                if (v(j) < 0.0) v = -v;
                break;
            }
        }
        basis.col(c) = v;
        const double lambda = idx >= 0 ? std::max(0.0, eig.eigenvalues()(idx)) : 0.0;
        out.explained_variance_ratio[static_cast<std::size_t>(c)] = lambda / total;
    }
    const Eigen::MatrixXd proj = x * basis;
    out.coords.reserve(rows.size());
    for (Eigen::Index i = 0; i < m; ++i) out.coords.push_back({proj(i, 0), proj(i, 1)});
    return out;
}

inline PcaProjection pca_project(const RankingPath& path) { return pca_project(path.rankings); }

/// ranks[item][plateau], with the beta bounds of each plateau.
struct RankTrajectories {
    std::vector<std::vector<std::size_t>> ranks;
    std::vector<double> plateau_lo;
    std::vector<double> plateau_hi;
};

inline RankTrajectories rank_trajectories(const RankingPath& path) {
    RankTrajectories t;
    const std::size_t n = path.rankings.empty() ? 0 : path.rankings.front().size();
    t.ranks.assign(n, std::vector<std::size_t>(path.plateaus(), 0));
    for (std::size_t k = 0; k < path.plateaus(); ++k) {
        for (std::size_t i = 0; i < n; ++i) t.ranks[i][k] = path.rankings[k].ranks[i];
        t.plateau_lo.push_back(path.plateau_lo(k));
        t.plateau_hi.push_back(path.plateau_hi(k));
    }
    return t;
}

}  // namespace fbopt
