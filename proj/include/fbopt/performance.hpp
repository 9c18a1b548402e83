#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fbopt/errors.hpp"

namespace fbopt {

/// Absolute tolerance used to decide that two score values tie.
inline constexpr double kTieTolerance = 1e-12;

/// Tolerance on the simplex constraint ptn + pfp + pfn + ptp = 1.
inline constexpr double kSimplexTolerance = 1e-12;

/**
 * A two-class crisp classification performance: a probability measure over
 * the outcomes {tn, fp, fn, tp}, i.e. a normalized confusion matrix.
 */
struct Performance {
    double ptn = 0.0;
    double pfp = 0.0;
    double pfn = 0.0;
    double ptp = 0.0;

    double prior_neg() const noexcept { return ptn + pfp; }
    double prior_pos() const noexcept { return pfn + ptp; }

    /// Normalize nonnegative counts (or unnormalized probabilities) onto the simplex.
    static Performance from_counts(double tn, double fp, double fn, double tp) {
        if (!(tn >= 0.0 && fp >= 0.0 && fn >= 0.0 && tp >= 0.0)) {
            throw InvalidArgument("confusion-matrix entries must be nonnegative");
        }
        const double total = tn + fp + fn + tp;
        if (!(total > 0.0) || !std::isfinite(total)) {
            throw InvalidArgument("confusion-matrix total must be positive and finite");
        }
        return Performance{tn / total, fp / total, fn / total, tp / total};
    }

    /// Build a performance from a point in ROC space and the positive-class prior.
    static Performance from_roc(double fpr, double tpr, double prior_pos) {
        if (!(fpr >= 0.0 && fpr <= 1.0 && tpr >= 0.0 && tpr <= 1.0)) {
            throw InvalidArgument("fpr and tpr must lie in [0, 1]");
        }
        if (!(prior_pos >= 0.0 && prior_pos <= 1.0)) {
            throw InvalidArgument("prior_pos must lie in [0, 1]");
        }
        const double prior_neg = 1.0 - prior_pos;
        return Performance{prior_neg * (1.0 - fpr), prior_neg * fpr,
                           prior_pos * (1.0 - tpr), prior_pos * tpr};
    }

    bool is_valid() const noexcept {
        return ptn >= 0.0 && pfp >= 0.0 && pfn >= 0.0 && ptp >= 0.0 &&
               std::abs(ptn + pfp + pfn + ptp - 1.0) <= kSimplexTolerance;
    }

    friend bool operator==(const Performance&, const Performance&) = default;
};

/// Ordered performances; the index is the identity used by rank vectors.
struct PerformanceSet {
    std::vector<Performance> items;
    std::vector<std::string> labels;  // empty or aligned with items

    std::size_t size() const noexcept { return items.size(); }

    std::string label(std::size_t i) const {
        return i < labels.size() ? labels[i] : std::to_string(i);
    }
};

inline PerformanceSet make_set(std::vector<Performance> items) {
    return PerformanceSet{std::move(items), {}};
}

}  // namespace fbopt
