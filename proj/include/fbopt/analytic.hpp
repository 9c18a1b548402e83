#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>

#include <boost/math/tools/roots.hpp>

#include "fbopt/distributions.hpp"
#include "fbopt/errors.hpp"
#include "fbopt/scores.hpp"
#include "fbopt/tradeoff.hpp"

namespace fbopt {

enum class TauPair { PrVsFBeta, FBetaVsRe };

// Closed forms of Kendall's tau as functions of the pencil offset ell, for the
// fixed-prior families. log1p keeps the large-ell tails accurate.

inline double analytic_tau_pi3(TauPair which, double ell) {
    if (!(ell > 0.0)) throw InvalidArgument("ell must be positive");
    const double log_ratio = std::log1p(1.0 / ell);  // log((1 + ell) / ell)
    if (which == TauPair::PrVsFBeta) return 1.0 - ell * (1.0 - ell * log_ratio);
    return 0.5 + ell - ell * ell * log_ratio;
}

inline double analytic_tau_pi4(TauPair which, double ell) {
    if (!(ell > 0.0)) throw InvalidArgument("ell must be positive");
    const double log_ratio = std::log1p(1.0 / ell);
    const double l2 = ell * ell;
    if (which == TauPair::PrVsFBeta) {
        // log(ell / (ell + 1)) = -log_ratio
        return 1.0 - (2.0 / 3.0) * ell * (-6.0 * l2 + 6.0 * (l2 - 1.0) * ell * log_ratio + 3.0 * ell + 4.0);
    }
    return (2.0 / 3.0) * ell * (-6.0 * l2 + 6.0 * (l2 - 1.0) * ell * log_ratio + 3.0 * ell + 4.0);
}

/// tau(Pr; Re) under Pi5(pi+).
inline double analytic_tau_pr_re_pi5(double prior_pos) {
    if (!(prior_pos > 0.0 && prior_pos < 1.0)) throw InvalidArgument("prior_pos must lie in (0, 1)");
    const double p = prior_pos;
    const double p2 = p * p, p4 = p2 * p2;
    const double q = 1.0 - p;
    return 1.0 - (-p4 + 2.0 * p4 * std::log(p) + p2) / (2.0 * q * q * p2);
}

/// tau(Pr; Re) for the families where it does not depend on the parameter.
inline double analytic_tau_pr_re(Family family) {
    switch (family) {
        case Family::Pi1:
        case Family::Pi2: return 1.0 / 3.0;
        case Family::Pi3: return 0.5;
        case Family::Pi4: return 0.0;
        case Family::Pi5: break;
    }
    throw InvalidArgument("tau(Pr; Re) under pi5 depends on the prior");
}

inline double analytic_tau(Family family, TauPair which, double ell) {
    if (family == Family::Pi3) return analytic_tau_pi3(which, ell);
    if (family == Family::Pi4) return analytic_tau_pi4(which, ell);
    throw InvalidArgument("closed-form tau(ell) is available for pi3 and pi4 only");
}

struct GoldenResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
};

/// Golden-section search for a minimum of a unimodal function on [lo, hi].
inline GoldenResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                            double tol = 1e-10, int max_iter = 500) {
    if (!(hi > lo)) throw InvalidArgument("golden section needs lo < hi");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    int it = 0;
    while (b - a > tol && it < max_iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++it;
    }
    const double x = 0.5 * (a + b);
    return GoldenResult{x, f(x), it};
}

/// Frechet variance of F-beta expressed through ell under Pi3 / Pi4.
inline double analytic_frechet_variance(Family family, double ell) {
    const double d1 = 0.5 * (1.0 - analytic_tau(family, TauPair::PrVsFBeta, ell));
    const double d2 = 0.5 * (1.0 - analytic_tau(family, TauPair::FBetaVsRe, ell));
    return d1 * d1 + d2 * d2;
}

/// ell minimizing the Frechet variance; constant over priors for Pi3 and Pi4.
inline double solve_optimal_ell(Family family) {
    if (family != Family::Pi3 && family != Family::Pi4) {
        throw InvalidArgument("the optimal ell is prior-independent only for pi3 and pi4");
    }
    return golden_section_minimize([family](double ell) { return analytic_frechet_variance(family, ell); },
                                   1e-4, 10.0, 1e-10)
        .x;
}

struct BetaAdaptation {
    double beta_squared = 0.0;
    double b = 0.0;  // beta^2 / (1 + beta^2), the weight of recall
};

inline BetaAdaptation beta_adaptation(Family family, double prior_pos) {
    const double ell = solve_optimal_ell(family);
    const double b2 = beta_squared_from_ell(ell, prior_pos);
    return BetaAdaptation{b2, b_from_beta_squared(b2)};
}

namespace detail {

/// Bracketed root of f on [lo, hi]; f must change sign.
inline double find_root(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                        std::uintmax_t max_iter = 200) {
    const double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) throw NonConvergence("root is not bracketed");
    auto tol = [x_tol](double a, double b) { return std::abs(b - a) <= x_tol; };
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, max_iter);
    return 0.5 * (r.first + r.second);
}

}  // namespace detail

/// Prior at which F1 sits at equal distance from precision and recall (Pi3 / Pi4).
inline double f1_equidistance_prior(Family family) {
    auto gap = [family](double p) {
        const double ell = p / (1.0 - p);
        return analytic_tau(family, TauPair::PrVsFBeta, ell) - analytic_tau(family, TauPair::FBetaVsRe, ell);
    };
    return detail::find_root(gap, 0.01, 0.99, 1e-12);
}

/// Degree of optimality of the F-beta with pencil offset ell (SIVF is ell = 1) under Pi3 / Pi4.
inline OptimalityFractions analytic_optimality(Family family, double ell) {
    return optimality_from_taus(analytic_tau(family, TauPair::PrVsFBeta, ell),
                                analytic_tau(family, TauPair::FBetaVsRe, ell), analytic_tau_pr_re(family));
}

/// tau(Pr; F) - tau(F; Re) under a distribution, by Monte Carlo.
inline double mc_equidistance_gap(const DistributionSpec& spec, const ScoreFunction& f, std::uint64_t n_pairs,
                                  std::uint64_t seed, const McOptions& opt = {}) {
    const auto a = mc_tau(spec, ScoreFunction::precision(), f, n_pairs, seed, opt);
    const auto b = mc_tau(spec, f, ScoreFunction::recall(), n_pairs, seed, opt);
    return a.value - b.value;
}

/**
 * Optimal ell under Pi5(pi+), where no closed form exists. The gap
 * tau(Pr; F) - tau(F; Re) is estimated with common random numbers (one seed
 * for every ell), which makes it a deterministic function whose sign change
 * is located on a log scale.
 */
inline double pi5_optimal_ell(double prior_pos, std::uint64_t n_pairs, std::uint64_t seed,
                              const McOptions& opt = {}) {
    const auto spec = DistributionSpec::pi5(prior_pos);
    auto gap = [&](double log_ell) {
        const double b2 = beta_squared_from_ell(std::exp(log_ell), prior_pos);
        return mc_equidistance_gap(spec, ScoreFunction::fbeta_squared(b2), n_pairs, seed, opt);
    };
    return std::exp(detail::find_root(gap, std::log(1e-6), std::log(1e6), 1e-4));
}

/// Prior under Pi5 at which SIVF is equidistant from precision and recall.
inline double pi5_sivf_equidistance_prior(std::uint64_t n_pairs, std::uint64_t seed, const McOptions& opt = {}) {
    auto gap = [&](double p) {
        return mc_equidistance_gap(DistributionSpec::pi5(p), ScoreFunction::sivf(), n_pairs, seed, opt);
    };
    return detail::find_root(gap, 0.05, 0.95, 1e-4);
}

}  // namespace fbopt
