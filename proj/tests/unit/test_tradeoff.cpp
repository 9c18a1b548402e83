#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fbopt/tradeoff.hpp"
#include "helpers.hpp"

using namespace fbopt;

namespace {

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> g;
    for (int k = 0; k < points; ++k) g.push_back(lo * std::pow(hi / lo, double(k) / (points - 1)));
    return g;
}

}  // namespace

TEST(Theta, Examples) {
    const Performance q{0.25, 0.25, 0.25, 0.25};
    EXPECT_NEAR(*theta(q, {0.25, 0.15, 0.35, 0.25}), 1.0, 1e-12);
    EXPECT_FALSE(theta(q, {0.4, 0.2, 0.1, 0.3}));
    // precision and recall both favor the first item
    EXPECT_FALSE(theta({0.3, 0.1, 0.1, 0.5}, q));
    EXPECT_THROW(theta(q, q), DegeneratePair);
    EXPECT_THROW(theta({1, 0, 0, 0}, q), InvalidArgument);
}

TEST(Theta, EqualizesFbeta) {
    const auto ps = sample(DistributionSpec::pi1(), 31, 200);
    int checked = 0;
    for (std::size_t i = 0; i + 1 < ps.size(); i += 2) {
        const auto t = theta(ps[i], ps[i + 1]);
        EXPECT_EQ(t, theta(ps[i + 1], ps[i]));
        if (!t || *t == 0.0) continue;
        const auto f = ScoreFunction::fbeta_squared(*t);
        EXPECT_NEAR(*evaluate(f, ps[i]), *evaluate(f, ps[i + 1]), 1e-10);
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

TEST(OptimalBeta, SingleCrossing) {
    const auto set = make_set({{0.25, 0.25, 0.25, 0.25}, {0.25, 0.15, 0.35, 0.25}});
    const auto b = optimal_beta(set);
    ASSERT_TRUE(b.beta_star_squared);
    EXPECT_NEAR(*b.beta_star_squared, 1.0, 1e-12);
    EXPECT_EQ(b.interval_lo, 0.0);
    EXPECT_TRUE(std::isinf(b.interval_hi));
}

TEST(OptimalBeta, Unanimous) {
    const auto set = make_set({{0.3, 0.1, 0.1, 0.5}, {0.25, 0.25, 0.25, 0.25}, {0.4, 0.3, 0.2, 0.1}});
    EXPECT_FALSE(optimal_beta(set).beta_star_squared);
    const auto o = optimality_decomposition(set, ScoreFunction::f1());
    EXPECT_TRUE(o.vacuous);
    EXPECT_EQ(o.degree(), 1.0);
    EXPECT_EQ(frechet_variance(set, 0.7), 0.0);
}

TEST(OptimalBeta, EvenCountTakesMidpoint) {
    // three items, two contradictory pairs
    const auto set = make_set({{0.1, 0.1, 0.4, 0.4}, {0.1, 0.3, 0.2, 0.4}, {0.2, 0.5, 0.1, 0.2}});
    const auto b = optimal_beta(set);
    ASSERT_EQ(b.thetas.size() % 2, 0u);
    ASSERT_GE(b.thetas.size(), 2u);
    const auto m = b.thetas.size() / 2;
    EXPECT_DOUBLE_EQ(*b.beta_star_squared, 0.5 * (b.thetas[m - 1] + b.thetas[m]));
    EXPECT_EQ(b.interval_lo, b.thetas[m - 1]);
    EXPECT_EQ(b.interval_hi, b.thetas[m]);
}

TEST(OptimalBeta, LiesInGridArgminPlateau) {
    const auto grid = log_grid(1e-4, 1e4, 2000);
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto set = test::sample_set(DistributionSpec::pi1(), 100 + s, 10);
        const auto b = optimal_beta(set);
        if (!b.beta_star_squared) continue;
        const double at_star = frechet_variance(set, *b.beta_star());
        double grid_min = 10.0;
        for (double beta : grid) grid_min = std::min(grid_min, frechet_variance(set, beta));
        EXPECT_LE(at_star, grid_min + 1e-15);
    }
}

TEST(Frechet, Endpoint) {
    const auto set = test::sample_set(DistributionSpec::pi1(), 41, 12);
    const auto ends = Endpoints::of(set);
    const double d = kendall_distance(ends.precision, ends.recall);
    EXPECT_DOUBLE_EQ(frechet_variance(set, 0.0), d * d);
}

TEST(Geodesic, Identity) {
    const std::vector<double> betas{0.0, 0.1, 0.5, 1.0, 2.0, 10.0};
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto set = test::sample_set(DistributionSpec::pi1(), 500 + s, 20);
        if (!test::set_tie_free(set)) continue;
        for (auto r : geodesic_check(set, betas)) EXPECT_EQ(r, 0);
    }
}

TEST(Geodesic, CorrelationSum) {
    const auto set = test::sample_set(DistributionSpec::pi1(), 42, 25);
    const auto ends = Endpoints::of(set);
    const double t = kendall_tau(ends.precision, ends.recall);
    const auto curve = frechet_curve(set, log_grid(1e-3, 1e3, 100));
    for (const auto& p : curve) EXPECT_NEAR(p.tau_pr_f + p.tau_f_re, 1.0 + t, 1e-12);
}

TEST(Geodesic, DistanceMonotoneInBeta) {
    const auto set = test::sample_set(DistributionSpec::pi1(), 43, 30);
    const auto ends = Endpoints::of(set);
    std::uint64_t prev = 0;
    for (double beta : log_grid(1e-3, 1e3, 400)) {
        const auto d = discordance(ends.precision, rank_by_score(set, ScoreFunction::fbeta(beta))).discordant;
        EXPECT_GE(d, prev);
        prev = d;
    }
}

TEST(Equidistance, AtOptimum) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto set = test::sample_set(DistributionSpec::pi1(), 700 + s, 15);
        if (!test::set_tie_free(set)) continue;
        const auto b = optimal_beta(set);
        if (!b.beta_star_squared || b.coalesced) continue;
        const auto ends = Endpoints::of(set);
        const auto f = rank_by_score(set, ScoreFunction::fbeta_squared(*b.beta_star_squared));
        const auto d1 = static_cast<long>(discordance(ends.precision, f).discordant);
        const auto d2 = static_cast<long>(discordance(f, ends.recall).discordant);
        EXPECT_LE(std::abs(d1 - d2), 1);
    }
}

TEST(Optimality, AtOptimumIsOne) {
    const auto set = test::sample_set(DistributionSpec::pi1(), 44, 30);
    const auto b = optimal_beta(set);
    ASSERT_TRUE(b.beta_star_squared);
    const auto o = optimality_decomposition(set, ScoreFunction::fbeta_squared(*b.beta_star_squared), b);
    EXPECT_EQ(o.not_optimal, 0u);
    EXPECT_EQ(o.degree(), 1.0);
}

TEST(Optimality, FractionsSumToOne) {
    const auto set = test::sample_set(DistributionSpec::pi1(), 45, 40);
    for (const auto& s : {ScoreFunction::precision(), ScoreFunction::f1(), ScoreFunction::sivf()}) {
        const auto o = optimality_decomposition(set, s);
        EXPECT_EQ(o.no_choice + o.optimal + o.not_optimal, o.total);
    }
}

TEST(Optimality, MatchesKendallDistanceForFbeta) {
    // on the geodesic, not-optimal pairs are exactly the pairs the candidate orders unlike the optimum
    for (std::uint64_t s = 0; s < 30; ++s) {
        const auto set = test::sample_set(DistributionSpec::pi1(), 800 + s, 20);
        if (!test::set_tie_free(set)) continue;
        const auto b = optimal_beta(set);
        if (!b.beta_star_squared) continue;
        const auto best = rank_by_score(set, ScoreFunction::fbeta_squared(*b.beta_star_squared));
        for (double beta : {0.0, 0.3, 1.0, 3.0}) {
            const auto f = ScoreFunction::fbeta(beta);
            const auto o = optimality_decomposition(set, f, b);
            EXPECT_EQ(o.not_optimal, discordance(rank_by_score(set, f), best).discordant);
            EXPECT_EQ(o.no_choice, o.total - discordance(Endpoints::of(set).precision,
                                                          Endpoints::of(set).recall).discordant);
        }
    }
}

TEST(Optimality, PrecisionOnFbetaSet) {
    const auto set = test::sample_set(DistributionSpec::pi3(0.9), 46, 60);
    const auto f1 = optimality_decomposition(set, ScoreFunction::f1());
    EXPECT_LT(f1.degree(), 1.0);
    const auto pr = optimality_decomposition(set, ScoreFunction::precision());
    EXPECT_LT(pr.degree(), 1.0);
    EXPECT_EQ(pr.off_geodesic, 0u);
}

TEST(Optimality, FromTaus) {
    const auto o = optimality_from_taus(std::log(2.0), 1.5 - std::log(2.0), 0.5);
    EXPECT_NEAR(o.degree, std::log(4.0) - 0.5, 1e-12);
    EXPECT_NEAR(o.p_no_choice + o.p_optimal + o.p_not_optimal, 1.0, 1e-15);
}

TEST(Heuristic, Examples) {
    EXPECT_DOUBLE_EQ(heuristic_beta(make_set({{0.2, 0.2, 0.1, 0.5}, {0.2, 0.1, 0.2, 0.5}})), 1.0);
    EXPECT_DOUBLE_EQ(heuristic_beta(make_set({{0.4, 0.1, 0.1, 0.4}, {0.2, 0.3, 0.3, 0.2}})), 1.0);
    EXPECT_THROW(heuristic_beta(make_set({{0.4, 0.1, 0.0, 0.5}, {0.2, 0.3, 0.0, 0.5}})), ZeroDenominator);
}

TEST(Report, AnalyzeTradeoff) {
    const auto set = test::sample_set(DistributionSpec::pi3(0.2), 47, 40);
    TradeoffOptions opt;
    opt.user_betas = {2.0};
    const auto rep = analyze_tradeoff(set, opt);
    ASSERT_TRUE(rep.best.beta_star_squared);
    std::vector<std::string> names;
    for (const auto& c : rep.candidates) names.push_back(c.name);
    EXPECT_EQ(names, (std::vector<std::string>{"F1", "SIVF", "heuristic", "F(beta=2)", "optimal"}));
    EXPECT_EQ(rep.candidates.back().optimality.degree(), 1.0);
    double min_var = 10.0;
    for (const auto& p : rep.frechet) min_var = std::min(min_var, p.variance);
    EXPECT_DOUBLE_EQ(frechet_variance(set, *rep.best.beta_star()), min_var);
}
