#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "fbopt/errors.hpp"
#include "fbopt/performance.hpp"

namespace fbopt {

enum class ScoreKind { Precision, Recall, FBeta, SIVF, FPR, TNR, IoU };

/**
 * Identifier of a score over performances. Only F-beta carries a parameter;
 * beta = +infinity is accepted and behaves exactly like recall.
 */
class ScoreFunction {
public:
    static ScoreFunction precision() { return ScoreFunction(ScoreKind::Precision); }
    static ScoreFunction recall() { return ScoreFunction(ScoreKind::Recall); }
    static ScoreFunction sivf() { return ScoreFunction(ScoreKind::SIVF); }
    static ScoreFunction fpr() { return ScoreFunction(ScoreKind::FPR); }
    static ScoreFunction tnr() { return ScoreFunction(ScoreKind::TNR); }
    static ScoreFunction iou() { return ScoreFunction(ScoreKind::IoU); }
    static ScoreFunction f1() { return fbeta(1.0); }

    static ScoreFunction fbeta(double beta) {
        if (!(beta >= 0.0)) throw InvalidArgument("beta must be nonnegative");
        ScoreFunction s(ScoreKind::FBeta);
        s.beta_ = beta;
        return s;
    }

    /// F-beta parameterized by beta^2 (the natural scale of the tradeoff).
    static ScoreFunction fbeta_squared(double beta_squared) {
        if (!(beta_squared >= 0.0)) throw InvalidArgument("beta^2 must be nonnegative");
        return fbeta(std::sqrt(beta_squared));
    }

    ScoreKind kind() const noexcept { return kind_; }
    double beta() const noexcept { return beta_; }

    std::string name() const {
        switch (kind_) {
            case ScoreKind::Precision: return "Precision";
            case ScoreKind::Recall: return "Recall";
            case ScoreKind::SIVF: return "SIVF";
            case ScoreKind::FPR: return "FPR";
            case ScoreKind::TNR: return "TNR";
            case ScoreKind::IoU: return "IoU";
            case ScoreKind::FBeta: break;
        }
        if (std::isinf(beta_)) return "F(beta=inf)";
        std::ostringstream os;
        os.precision(6);
        os << "F(beta=" << beta_ << ")";
        return os.str();
    }

    friend bool operator==(const ScoreFunction&, const ScoreFunction&) = default;

private:
    explicit ScoreFunction(ScoreKind kind) : kind_(kind) {}

    ScoreKind kind_;
    double beta_ = 0.0;
};

namespace detail {

inline std::optional<double> ratio(double num, double den) {
    if (den == 0.0) return std::nullopt;
    return num / den;
}

}  // namespace detail

/// Score value, or nullopt when the defining denominator vanishes.
inline std::optional<double> evaluate(const ScoreFunction& score, const Performance& p) {
    switch (score.kind()) {
        case ScoreKind::Precision:
            return detail::ratio(p.ptp, p.pfp + p.ptp);
        case ScoreKind::Recall:
            return detail::ratio(p.ptp, p.pfn + p.ptp);
        case ScoreKind::FBeta: {
            const double beta = score.beta();
            if (std::isinf(beta)) return detail::ratio(p.ptp, p.pfn + p.ptp);
            if (p.pfp + p.pfn + p.ptp == 0.0) return std::nullopt;  // ptn = 1
            const double b2 = beta * beta;
            return detail::ratio((1.0 + b2) * p.ptp, p.pfp + b2 * p.pfn + (1.0 + b2) * p.ptp);
        }
        case ScoreKind::SIVF: {
            const double neg = p.prior_neg();
            const double pos = p.prior_pos();
            if (neg == 0.0 || pos == 0.0) return std::nullopt;
            const double tpr = p.ptp / pos;
            const double fpr = p.pfp / neg;
            return 2.0 * tpr / (tpr + fpr + 1.0);
        }
        case ScoreKind::FPR:
            return detail::ratio(p.pfp, p.prior_neg());
        case ScoreKind::TNR:
            return detail::ratio(p.ptn, p.prior_neg());
        case ScoreKind::IoU:
            return detail::ratio(p.ptp, p.pfp + p.pfn + p.ptp);
    }
    return std::nullopt;
}

/**
 * F-beta as the weighted harmonic mean of precision and recall, with weight
 * beta^2 / (1 + beta^2) on recall. Defined only when ptp > 0; on that domain
 * it agrees with the count form used by evaluate().
 */
inline std::optional<double> fbeta_harmonic(double beta, const Performance& p) {
    if (p.ptp == 0.0) return std::nullopt;
    const double precision = p.ptp / (p.pfp + p.ptp);
    const double recall = p.ptp / (p.pfn + p.ptp);
    if (std::isinf(beta)) return recall;
    const double b2 = beta * beta;
    const double w_recall = b2 / (1.0 + b2);
    return 1.0 / ((1.0 - w_recall) / precision + w_recall / recall);
}

/// Per-outcome importance of a ranking score. Only the direction matters.
struct ImportanceWeights {
    double w_tn = 0.0;
    double w_fp = 0.0;
    double w_fn = 0.0;
    double w_tp = 0.0;

    static ImportanceWeights make(double tn, double fp, double fn, double tp) {
        if (!(tn >= 0.0 && fp >= 0.0 && fn >= 0.0 && tp >= 0.0)) {
            throw InvalidArgument("importance weights must be nonnegative");
        }
        if (!(tn > 0.0 || fp > 0.0 || fn > 0.0 || tp > 0.0)) {
            throw InvalidArgument("at least one importance weight must be positive");
        }
        return ImportanceWeights{tn, fp, fn, tp};
    }

    /// True when the two weight vectors are positive multiples of each other.
    bool proportional_to(const ImportanceWeights& o, double rel_tol = 1e-12) const {
        const double a[4] = {w_tn, w_fp, w_fn, w_tp};
        const double b[4] = {o.w_tn, o.w_fp, o.w_fn, o.w_tp};
        double sa = 0.0, sb = 0.0;
        for (int i = 0; i < 4; ++i) {
            sa += a[i];
            sb += b[i];
        }
        if (sa <= 0.0 || sb <= 0.0) return false;
        for (int i = 0; i < 4; ++i) {
            if (std::abs(a[i] / sa - b[i] / sb) > rel_tol) return false;
        }
        return true;
    }
};

/// (I(tn) ptn + I(tp) ptp) / (I(tn) ptn + I(fp) pfp + I(fn) pfn + I(tp) ptp)
inline std::optional<double> ranking_score(const ImportanceWeights& w, const Performance& p) {
    const double satisfying = w.w_tn * p.ptn + w.w_tp * p.ptp;
    return detail::ratio(satisfying, satisfying + w.w_fp * p.pfp + w.w_fn * p.pfn);
}

inline ImportanceWeights fbeta_importance(double beta) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw InvalidArgument("beta must be finite and nonnegative");
    }
    const double b2 = beta * beta;
    return ImportanceWeights{0.0, 1.0, b2, 1.0 + b2};
}

inline ImportanceWeights sivf_importance(double prior_pos) {
    if (!(prior_pos > 0.0 && prior_pos < 1.0)) {
        throw InvalidArgument("prior_pos must lie strictly between 0 and 1");
    }
    const double prior_neg = 1.0 - prior_pos;
    return ImportanceWeights{0.0, prior_pos, prior_neg, 2.0 * prior_neg};
}

/**
 * Offset of the vertex of the ROC pencil formed by the F-beta isometrics:
 * ell = beta^2 pi+ / pi-, the vertex sitting at (FPR, TPR) = (-ell, 0).
 */
inline double ell_from_beta(double beta, double prior_pos) {
    if (!(beta >= 0.0)) throw InvalidArgument("beta must be nonnegative");
    if (!(prior_pos >= 0.0 && prior_pos < 1.0)) {
        throw InvalidArgument("prior_pos must lie in [0, 1)");
    }
    if (prior_pos == 0.0) {
        if (std::isinf(beta)) throw InvalidArgument("ell is undefined for beta = inf and prior_pos = 0");
        return 0.0;
    }
    return beta * beta * prior_pos / (1.0 - prior_pos);
}

/// Inverse of ell_from_beta on the beta^2 scale.
inline double beta_squared_from_ell(double ell, double prior_pos) {
    if (!(prior_pos > 0.0 && prior_pos < 1.0)) {
        throw InvalidArgument("prior_pos must lie strictly between 0 and 1");
    }
    return ell * (1.0 - prior_pos) / prior_pos;
}

inline double b_from_beta_squared(double beta_squared) {
    if (std::isinf(beta_squared)) return 1.0;
    return beta_squared / (1.0 + beta_squared);
}

}  // namespace fbopt
