#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fbopt/errors.hpp"
#include "fbopt/performance.hpp"

namespace fbopt {

/**
 * Performance tables in CSV. Two layouts are accepted, each with an optional
 * leading label column:
 *
 *   label,tn,fp,fn,tp            counts or unnormalized probabilities
 *   label,fpr,tpr[,prior_pos]    ROC points sharing one positive-class prior
 *
 * Blank lines and lines starting with '#' are ignored. Row numbers in errors
 * are 1-based line numbers of the file.
 */
namespace csv {

inline std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

inline std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline double number(const std::string& field, std::size_t row, const std::string& column) {
    if (field.empty()) throw ParseError(row, "empty value in column '" + column + "'");
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || !std::isfinite(v)) {
        throw ParseError(row, "cannot parse '" + field + "' in column '" + column + "' as a number");
    }
    return v;
}

}  // namespace csv

struct IngestOptions {
    std::optional<double> prior_pos;  // for ROC tables without a prior_pos column
};

inline PerformanceSet ingest(std::istream& in, const IngestOptions& opt = {}) {
    enum class Schema { Counts, Roc };
    std::string line;
    std::size_t row = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto t = csv::trim(line);
        if (t.empty() || t.front() == '#') continue;
        header = csv::split(t);
        break;
    }
    if (header.empty()) throw ParseError(row, "missing header");
    for (auto& h : header) h = csv::lower(h);

    auto find = [&](const std::string& name) -> std::optional<std::size_t> {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) return std::nullopt;
        return static_cast<std::size_t>(it - header.begin());
    };
    const auto tn = find("tn"), fp = find("fp"), fn = find("fn"), tp = find("tp");
    const auto fpr = find("fpr"), tpr = find("tpr"), prior = find("prior_pos");
    const bool has_counts = tn || fp || fn || tp;
    const bool has_roc = fpr || tpr || prior;
    if (has_counts && has_roc) throw MixedSchema(row, "header mixes count and ROC columns");
    Schema schema;
    if (tn && fp && fn && tp) {
        schema = Schema::Counts;
    } else if (fpr && tpr) {
        schema = Schema::Roc;
    } else {
        throw ParseError(row, "header must name tn,fp,fn,tp or fpr,tpr[,prior_pos]");
    }
    const std::size_t data_columns = schema == Schema::Counts ? 4 : (prior ? 3 : 2);
    std::optional<std::size_t> label_col;
    if (header.size() == data_columns + 1) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c != tn && c != fp && c != fn && c != tp && c != fpr && c != tpr && c != prior) label_col = c;
        }
        if (label_col != 0u) throw ParseError(row, "the label column must come first");
    } else if (header.size() != data_columns) {
        throw ParseError(row, "unexpected columns in header");
    }
    if (schema == Schema::Roc && !prior && !opt.prior_pos) {
        throw InvalidArgument("ROC-form input needs a prior_pos column or an explicit prior");
    }

    PerformanceSet set;
    std::optional<double> shared_prior = opt.prior_pos;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto t = csv::trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto fields = csv::split(t);
        if (fields.size() != header.size()) {
            throw ParseError(row, "row has " + std::to_string(fields.size()) + " fields, header has " +
                                      std::to_string(header.size()));
        }
        auto value = [&](std::size_t c) { return csv::number(fields[c], row, header[c]); };
        if (schema == Schema::Counts) {
            const double v[4] = {value(*tn), value(*fp), value(*fn), value(*tp)};
            for (double x : v) {
                if (x < 0.0) throw NegativeCount(row, "negative entry in confusion matrix");
            }
            const double total = v[0] + v[1] + v[2] + v[3];
            if (!(total > 0.0)) throw ZeroTotal(row, "confusion matrix sums to zero");
            set.items.push_back(Performance::from_counts(v[0], v[1], v[2], v[3]));
        } else {
            const double x = value(*fpr), y = value(*tpr);
            if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
                throw ParseError(row, "fpr and tpr must lie in [0, 1]");
            }
            if (prior) {
                const double p = value(*prior);
                if (!(p > 0.0 && p < 1.0)) throw ParseError(row, "prior_pos must lie in (0, 1)");
                if (shared_prior && *shared_prior != p) {
                    throw MixedPriors(row, "ROC rows must share one prior_pos");
                }
                shared_prior = p;
            }
            set.items.push_back(Performance::from_roc(x, y, *shared_prior));
        }
        if (label_col) set.labels.push_back(fields[*label_col]);
    }
    if (set.items.empty()) throw ParseError(row, "no data rows");
    return set;
}

inline PerformanceSet ingest(const std::string& path, const IngestOptions& opt = {}) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return ingest(in, opt);
}

}  // namespace fbopt
