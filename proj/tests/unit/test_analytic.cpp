#include <cmath>

#include <gtest/gtest.h>

#include "fbopt/analytic.hpp"

using namespace fbopt;

TEST(Pi3, Limits) {
    EXPECT_NEAR(analytic_tau_pi3(TauPair::PrVsFBeta, 1e-6), 1.0, 1e-5);
    EXPECT_NEAR(analytic_tau_pi3(TauPair::PrVsFBeta, 1.0), std::log(2.0), 1e-15);
    EXPECT_NEAR(analytic_tau_pi3(TauPair::FBetaVsRe, 1.0), 1.5 - std::log(2.0), 1e-15);
    EXPECT_THROW(analytic_tau_pi3(TauPair::PrVsFBeta, 0.0), InvalidArgument);
}

TEST(Pi3, SumIdentity) {
    for (double ell = 1e-3; ell < 1e3; ell *= 1.37) {
        EXPECT_NEAR(analytic_tau_pi3(TauPair::PrVsFBeta, ell) + analytic_tau_pi3(TauPair::FBetaVsRe, ell), 1.5,
                    1e-12);
    }
    EXPECT_LE(std::abs(analytic_tau_pi3(TauPair::PrVsFBeta, 0.61585) - analytic_tau_pi3(TauPair::FBetaVsRe, 0.61585)),
              1e-4);
}

TEST(Pi4, SumIdentity) {
    for (double ell = 1e-3; ell < 50; ell *= 1.37) {
        EXPECT_NEAR(analytic_tau_pi4(TauPair::PrVsFBeta, ell) + analytic_tau_pi4(TauPair::FBetaVsRe, ell), 1.0,
                    1e-12);
    }
    EXPECT_LE(std::abs(analytic_tau_pi4(TauPair::PrVsFBeta, 0.48) - analytic_tau_pi4(TauPair::FBetaVsRe, 0.48)),
              2e-2);
    EXPECT_NEAR(analytic_tau_pi4(TauPair::PrVsFBeta, 1e-6), 1.0, 1e-5);
    EXPECT_NEAR(analytic_tau_pi4(TauPair::PrVsFBeta, 1.0), 1.0 / 3.0, 1e-12);
}

TEST(Pi5, PrRe) {
    for (double p = 0.01; p < 1.0; p += 0.01) {
        const double t = analytic_tau_pr_re_pi5(p);
        EXPECT_GT(t, 0.0);
        EXPECT_LT(t, 0.5);
    }
    const auto mc = mc_tau(DistributionSpec::pi5(0.5), ScoreFunction::precision(), ScoreFunction::recall(), 400000, 6);
    EXPECT_NEAR(mc.value, analytic_tau_pr_re_pi5(0.5), 0.01);
    const auto hi = mc_tau(DistributionSpec::pi5(0.99), ScoreFunction::precision(), ScoreFunction::recall(), 400000, 7);
    EXPECT_NEAR(hi.value, analytic_tau_pr_re_pi5(0.99), 0.01);
    EXPECT_THROW(analytic_tau_pr_re(Family::Pi5), InvalidArgument);
}

TEST(GoldenSection, Quadratic) {
    const auto r = golden_section_minimize([](double x) { return (x - 1.3) * (x - 1.3); }, 0.0, 5.0, 1e-10);
    EXPECT_NEAR(r.x, 1.3, 1e-8);
    EXPECT_THROW(golden_section_minimize([](double x) { return x; }, 1.0, 1.0), InvalidArgument);
}

TEST(OptimalEll, Constants) {
    const double l3 = solve_optimal_ell(Family::Pi3);
    const double l4 = solve_optimal_ell(Family::Pi4);
    EXPECT_NEAR(l3, 0.61585, 5e-4);
    EXPECT_NEAR(l4, 0.48, 1e-2);
    EXPECT_LE(std::abs(analytic_tau_pi3(TauPair::PrVsFBeta, l3) - analytic_tau_pi3(TauPair::FBetaVsRe, l3)), 1e-6);
    EXPECT_LE(std::abs(analytic_tau_pi4(TauPair::PrVsFBeta, l4) - analytic_tau_pi4(TauPair::FBetaVsRe, l4)), 1e-6);
    EXPECT_THROW(solve_optimal_ell(Family::Pi5), InvalidArgument);
}

TEST(Adaptation, Examples) {
    EXPECT_NEAR(beta_adaptation(Family::Pi3, 0.5).beta_squared, 0.61585, 5e-4);
    EXPECT_NEAR(beta_adaptation(Family::Pi4, 0.5).beta_squared, 0.48, 1e-2);
    double prev = 0.0;
    for (double p : {0.9, 0.5, 0.1, 0.01, 0.001}) {
        const double b = beta_adaptation(Family::Pi3, p).b;
        EXPECT_GT(b, prev);
        prev = b;
    }
    EXPECT_GT(prev, 0.99);
}

TEST(Equidistance, F1Priors) {
    EXPECT_NEAR(f1_equidistance_prior(Family::Pi3), 0.381, 0.01);
    EXPECT_NEAR(f1_equidistance_prior(Family::Pi4), 0.325, 0.01);
}

TEST(Optimality, SivfClosedForms) {
    EXPECT_NEAR(analytic_optimality(Family::Pi3, 1.0).degree, std::log(4.0) - 0.5, 1e-12);
    EXPECT_NEAR(analytic_optimality(Family::Pi4, 1.0).degree, 5.0 / 6.0, 1e-12);
    EXPECT_NEAR(analytic_optimality(Family::Pi3, solve_optimal_ell(Family::Pi3)).degree, 1.0, 1e-8);
}

TEST(Pi5, OptimalBetaTrend) {
    double prev = 0.0;
    for (double p : {0.1, 0.5, 0.9}) {
        const double beta = std::sqrt(beta_squared_from_ell(pi5_optimal_ell(p, 100000, 8), p));
        EXPECT_GT(beta, prev);
        prev = beta;
    }
}
