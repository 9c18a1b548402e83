#include <cmath>

#include <gtest/gtest.h>

#include "fbopt/manifold.hpp"
#include "helpers.hpp"

using namespace fbopt;

namespace {

// precision orders A > C > B, recall C > B > A; pairs AC and AB cross at beta^2 = 0.5 and 2
PerformanceSet three() { return make_set({{0.3, 0.1, 0.4, 0.2}, {0.25, 0.2, 0.35, 0.2}, {0.35, 0.15, 0.3, 0.2}}); }

}  // namespace

TEST(Path, Unanimous) {
    const auto set = make_set({{0.3, 0.1, 0.1, 0.5}, {0.25, 0.25, 0.25, 0.25}, {0.4, 0.3, 0.2, 0.1}});
    const auto path = build_path(set);
    EXPECT_EQ(path.plateaus(), 1u);
    EXPECT_THROW(pca_project(path), DegenerateSpread);
}

TEST(Path, ThreeItems) {
    const auto set = three();
    const auto path = build_path(set);
    ASSERT_EQ(path.plateaus(), 3u);
    EXPECT_NEAR(path.transition_betas[0], std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(path.transition_betas[1], std::sqrt(2.0), 1e-12);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_DOUBLE_EQ(path.distance_from_precision(k), k / 3.0);
    const double probes[] = {0.1, 1.0, 10.0};
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(path.rankings[k], rank_by_score(set, ScoreFunction::fbeta(probes[k])));
    }
    EXPECT_EQ(path.rankings.front(), rank_by_score(set, ScoreFunction::precision()));
    EXPECT_EQ(path.rankings.back(), rank_by_score(set, ScoreFunction::recall()));
    EXPECT_EQ(path.middle_plateau(), 1u);
}

TEST(Path, PlateauCountOracle) {
    int compared = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto set = test::sample_set(DistributionSpec::pi1(), 900 + s, 7);
        if (!test::set_tie_free(set)) continue;
        const auto path = build_path(set);
        if (path.coalesced) continue;
        const double lo = 1e-8, hi = 1e8;
        const auto r_lo = rank_by_score(set, ScoreFunction::fbeta(lo));
        const auto r_hi = rank_by_score(set, ScoreFunction::fbeta(hi));
        ASSERT_EQ(r_lo, path.rankings.front());
        ASSERT_EQ(r_hi, path.rankings.back());
        EXPECT_EQ(path.plateaus(), test::count_transitions(set, lo, hi, r_lo, r_hi) + 1) << "seed " << s;
        ++compared;
    }
    EXPECT_GT(compared, 80);
}

TEST(Path, StepsAreSingleSwaps) {
    const auto set = test::sample_set(DistributionSpec::pi3(0.1), 61, 60);
    const auto path = build_path(set);
    const auto ends = Endpoints::of(set);
    EXPECT_EQ(path.discordant_from_precision.back(), discordance(ends.precision, ends.recall).discordant);
    for (std::size_t k = 1; k < path.plateaus(); ++k) {
        EXPECT_EQ(path.discordant_from_precision[k] - path.discordant_from_precision[k - 1],
                  path.swaps_per_transition[k - 1]);
        EXPECT_EQ(discordance(path.rankings[k - 1], path.rankings[k]).discordant, path.swaps_per_transition[k - 1]);
    }
}

TEST(Pca, ContractiveAndExplained) {
    const auto set = test::sample_set(DistributionSpec::pi3(0.1), 62, 60);
    const auto path = build_path(set);
    const auto pca = pca_project(path);
    ASSERT_EQ(pca.coords.size(), path.plateaus());
    EXPECT_GE(pca.explained_variance_ratio[0] + pca.explained_variance_ratio[1], 0.9);
    for (std::size_t i = 0; i < path.plateaus(); ++i) {
        for (std::size_t j = i + 1; j < path.plateaus(); ++j) {
            const double dx = pca.coords[i][0] - pca.coords[j][0];
            const double dy = pca.coords[i][1] - pca.coords[j][1];
            EXPECT_LE(std::hypot(dx, dy), spearman_distance(path.rankings[i], path.rankings[j]) + 1e-9);
        }
    }
}

TEST(Pca, IdenticalRankingsCoincide) {
    const auto set = three();
    auto rows = build_path(set).rankings;
    rows.push_back(rows.front());
    const auto pca = pca_project(rows);
    EXPECT_EQ(pca.coords.front(), pca.coords.back());
    EXPECT_EQ(pca_project(rows).coords, pca.coords);
}

TEST(Trajectories, Shape) {
    const auto set = test::sample_set(DistributionSpec::pi1(), 63, 20);
    const auto path = build_path(set);
    const auto t = rank_trajectories(path);
    ASSERT_EQ(t.ranks.size(), set.size());
    const std::size_t n = set.size();
    for (std::size_t k = 0; k < path.plateaus(); ++k) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) sum += t.ranks[i][k];
        EXPECT_EQ(sum, n * (n + 1) / 2);
    }
    EXPECT_EQ(t.plateau_lo.front(), 0.0);
    EXPECT_TRUE(std::isinf(t.plateau_hi.back()));
}

TEST(Trajectories, UnanimousLeader) {
    auto set = three();
    set.items.push_back({0.3, 0.02, 0.08, 0.6});
    const auto t = rank_trajectories(build_path(set));
    for (auto r : t.ranks.back()) EXPECT_EQ(r, 1u);
}

TEST(Path, RequiresTieFree) {
    const auto set = make_set({{0.3, 0.1, 0.4, 0.2}, {0.3, 0.1, 0.4, 0.2}, {0.35, 0.15, 0.3, 0.2}});
    EXPECT_THROW(build_path(set), InvalidArgument);
}
