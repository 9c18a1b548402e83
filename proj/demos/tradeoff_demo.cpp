// Samples a fixed-prior set of classifiers and reports the optimal F-beta
// along with how well F1 and SIVF approximate it.

#include <cstdio>

#include "fbopt/fbopt.hpp"

int main() {
    using namespace fbopt;

    const auto set = make_set(sample(DistributionSpec::pi3(0.1), 2024, 40));
    const auto rep = analyze_tradeoff(set);

    std::printf("tau(Pr;Re) = %.4f over %zu items\n", rep.tau_pr_re, set.size());
    if (const auto beta = rep.best.beta_star()) {
        std::printf("optimal beta = %.4f (beta^2 in [%.4g, %.4g])\n", *beta, rep.best.interval_lo,
                    rep.best.interval_hi);
    }
    for (const auto& c : rep.candidates) {
        const auto& o = c.optimality;
        std::printf("%-10s  no choice %.3f  optimal %.3f  not optimal %.3f  O = %.3f\n", c.name.c_str(),
                    o.p_no_choice(), o.p_optimal(), o.p_not_optimal(), o.degree());
    }

    const auto path = build_path(set);
    std::printf("%zu rankings on the path, middle plateau %zu\n", path.plateaus(), path.middle_plateau());
    return 0;
}
