#pragma once

// Orchestration behind the fbopt command-line tool: every command writes its
// report and plot tables into an output directory. Kept header-only so the
// tests can drive the commands without spawning processes.

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fbopt/analytic.hpp"
#include "fbopt/distributions.hpp"
#include "fbopt/errors.hpp"
#include "fbopt/ingest.hpp"
#include "fbopt/manifold.hpp"
#include "fbopt/ranking.hpp"
#include "fbopt/scores.hpp"
#include "fbopt/tradeoff.hpp"

namespace fbopt::app {

enum class Command { Analyze, Sweep, Manifold, Table1 };
enum class Format { Json, Csv };

inline std::string command_name(Command c) {
    switch (c) {
        case Command::Analyze: return "analyze";
        case Command::Sweep: return "sweep";
        case Command::Manifold: return "manifold";
        case Command::Table1: return "table1";
    }
    return "?";
}

struct BetaGrid {
    double min = 1e-3;
    double max = 1e3;
    std::size_t points = 200;
    bool log_spaced = true;
};

struct AnalysisConfig {
    Command command = Command::Analyze;
    std::optional<std::string> input_path;
    std::optional<double> prior;
    std::optional<Family> family;
    std::optional<double> param;
    std::uint64_t seed = 0;
    std::uint64_t n_pairs = 100000;
    BetaGrid beta_grid;
    std::vector<double> betas;
    std::string output_dir = ".";
    Format format = Format::Json;
    unsigned workers = 1;

    void validate() const {
        if ((command == Command::Analyze || command == Command::Manifold) && !input_path) {
            throw InvalidArgument(command_name(command) + " requires --input");
        }
        if (command == Command::Sweep && !family) throw InvalidArgument("sweep requires --family");
        if (n_pairs < 1) throw InvalidArgument("--pairs must be positive");
        if (!(beta_grid.min > 0.0 && beta_grid.max > beta_grid.min) || beta_grid.points < 2) {
            throw InvalidArgument("invalid beta grid");
        }
        for (double b : betas) {
            if (!(b >= 0.0)) throw InvalidArgument("--beta values must be nonnegative");
        }
        if (prior && !(*prior > 0.0 && *prior < 1.0)) throw InvalidArgument("--prior must lie in (0, 1)");
    }
};

namespace detail {

inline std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline nlohmann::json jnum(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

inline nlohmann::json jopt(const std::optional<double>& v) {
    if (!v) return nullptr;
    return jnum(*v);
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace detail

/// Hash of everything that determines the outputs: the output directory is excluded, input contents are included.
inline std::string config_hash(const AnalysisConfig& c) {
    std::ostringstream os;
    os << "cmd=" << command_name(c.command);
    if (c.input_path) os << ";input=" << std::hex << detail::fnv1a(detail::read_file(*c.input_path)) << std::dec;
    if (c.prior) os << ";prior=" << detail::num(*c.prior);
    if (c.family) os << ";family=" << family_name(*c.family);
    if (c.param) os << ";param=" << detail::num(*c.param);
    os << ";seed=" << c.seed << ";pairs=" << c.n_pairs;
    os << ";grid=" << detail::num(c.beta_grid.min) << "," << detail::num(c.beta_grid.max) << ","
       << c.beta_grid.points << "," << c.beta_grid.log_spaced;
    os << ";betas=";
    for (double b : c.betas) os << detail::num(b) << ",";
    os << ";format=" << (c.format == Format::Json ? "json" : "csv");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, detail::fnv1a(os.str()));
    return buf;
}

/// Writes CSV tables and reports under one directory, stamping each CSV with the config hash and seed.
class OutputWriter {
public:
    explicit OutputWriter(const AnalysisConfig& c) : dir_(c.output_dir), seed_(c.seed), hash_(config_hash(c)) {
        std::filesystem::create_directories(dir_);
        stamp_ = "# fbopt " + command_name(c.command) + " config_hash=" + hash_ + " seed=" + std::to_string(seed_);
    }

    const std::string& hash() const noexcept { return hash_; }
    std::uint64_t seed() const noexcept { return seed_; }

    void csv(const std::string& name, const std::vector<std::string>& columns,
             const std::vector<std::vector<std::string>>& rows) {
        std::ostringstream os;
        os << stamp_ << "\n";
        write_row(os, columns);
        for (const auto& r : rows) write_row(os, r);
        write(name, os.str());
    }

    void json(const std::string& name, nlohmann::json j) {
        j["config_hash"] = hash_;
        j["seed"] = seed_;
        write(name, j.dump(2) + "\n");
    }

    const std::vector<std::string>& files() const noexcept { return files_; }

private:
    static void write_row(std::ostream& os, const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << "\n";
    }

    void write(const std::string& name, const std::string& content) {
        const auto path = dir_ / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write '" + path.string() + "'");
        out << content;
        files_.push_back(path.string());
    }

    std::filesystem::path dir_;
    std::uint64_t seed_;
    std::string hash_;
    std::string stamp_;
    std::vector<std::string> files_;
};

inline std::vector<double> make_grid(const BetaGrid& g) {
    std::vector<double> out;
    for (std::size_t k = 0; k < g.points; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(g.points - 1);
        out.push_back(g.log_spaced ? g.min * std::pow(g.max / g.min, t) : g.min + (g.max - g.min) * t);
    }
    return out;
}

namespace detail {

inline nlohmann::json optimality_json(const CandidateResult& c) {
    const auto& o = c.optimality;
    nlohmann::json j;
    j["beta_squared"] = jopt(c.beta_squared);
    j["pairs"] = {{"no_choice", o.no_choice}, {"optimal", o.optimal}, {"not_optimal", o.not_optimal},
                  {"total", o.total}};
    j["p_no_choice"] = o.p_no_choice();
    j["p_optimal"] = o.p_optimal();
    j["p_not_optimal"] = o.p_not_optimal();
    j["degree_of_optimality"] = o.degree();
    j["vacuous"] = o.vacuous;
    j["off_geodesic_pairs"] = o.off_geodesic;
    return j;
}

inline void write_path_tables(OutputWriter& out, const PerformanceSet& set, const RankingPath& path,
                              const std::vector<std::pair<std::string, Ranking>>& markers,
                              nlohmann::json* summary) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < path.plateaus(); ++k) {
        rows.push_back({std::to_string(k), num(path.plateau_lo(k)), num(path.plateau_hi(k)),
                        num(path.probe_betas[k]), std::to_string(path.discordant_from_precision[k]),
                        num(path.distance_from_precision(k))});
    }
    out.csv("path.csv", {"plateau", "beta_lo", "beta_hi", "probe_beta", "discordant_from_precision",
                         "distance_from_precision"},
            rows);

    const auto traj = rank_trajectories(path);
    rows.clear();
    for (std::size_t i = 0; i < traj.ranks.size(); ++i) {
        for (std::size_t k = 0; k < path.plateaus(); ++k) {
            rows.push_back({set.label(i), std::to_string(k), num(traj.plateau_lo[k]), num(traj.plateau_hi[k]),
                            std::to_string(traj.ranks[i][k])});
        }
    }
    out.csv("rank_trajectories.csv", {"item", "plateau", "beta_lo", "beta_hi", "rank"}, rows);

    std::vector<Ranking> pts = path.rankings;
    for (const auto& m : markers) pts.push_back(m.second);
    rows.clear();
    try {
        const auto pca = pca_project(pts);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const bool marker = k >= path.plateaus();
            rows.push_back({marker ? "marker" : "plateau",
                            marker ? markers[k - path.plateaus()].first : std::to_string(k),
                            num(pca.coords[k][0]), num(pca.coords[k][1])});
        }
        if (summary) {
            (*summary)["pca_explained_variance_ratio"] = {pca.explained_variance_ratio[0],
                                                          pca.explained_variance_ratio[1]};
        }
    } catch (const DegenerateSpread&) {
        if (summary) (*summary)["pca_explained_variance_ratio"] = nullptr;
    }
    out.csv("pca.csv", {"kind", "name", "pc1", "pc2"}, rows);
}

inline std::vector<std::pair<std::string, Ranking>> marker_rankings(const PerformanceSet& set,
                                                                    const OptimalBeta& best) {
    std::vector<std::pair<std::string, Ranking>> m;
    auto add = [&](const std::string& name, const ScoreFunction& s) {
        try {
            m.emplace_back(name, rank_by_score(set, s));
        } catch (const UndefinedScore&) {
        }
    };
    add("Precision", ScoreFunction::precision());
    add("Recall", ScoreFunction::recall());
    add("F1", ScoreFunction::f1());
    add("SIVF", ScoreFunction::sivf());
    if (best.beta_star_squared) add("optimal", ScoreFunction::fbeta_squared(*best.beta_star_squared));
    return m;
}

}  // namespace detail

struct AnalyzeResult {
    TradeoffReport report;
    std::vector<std::string> files;
};

inline AnalyzeResult analyze(const AnalysisConfig& cfg) {
    cfg.validate();
    const auto set = ingest(*cfg.input_path, IngestOptions{cfg.prior});
    TradeoffOptions opt;
    opt.grid_min = cfg.beta_grid.min;
    opt.grid_max = cfg.beta_grid.max;
    opt.grid_points = cfg.beta_grid.points;
    opt.user_betas = cfg.betas;
    auto rep = analyze_tradeoff(set, opt);
    if (!cfg.beta_grid.log_spaced) {
        auto betas = make_grid(cfg.beta_grid);
        for (double t : rep.best.thetas) {
            if (t > 0.0) betas.push_back(std::sqrt(t));
        }
        std::sort(betas.begin(), betas.end());
        betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
        rep.frechet = frechet_curve(set, betas);
    }

    OutputWriter out(cfg);
    nlohmann::json j;
    j["command"] = "analyze";
    j["items"] = set.size();
    j["tau_pr_re"] = rep.tau_pr_re;
    j["discordant_pr_re"] = rep.pr_re.discordant;
    j["total_pairs"] = rep.pr_re.total;
    const auto& b = rep.best;
    j["beta_star_squared"] = detail::jopt(b.beta_star_squared);
    j["beta_star"] = detail::jopt(b.beta_star());
    j["optimal_interval_beta_squared"] = {detail::jnum(b.interval_lo), detail::jnum(b.interval_hi)};
    j["transition_thetas"] = b.thetas;
    j["zero_thetas"] = b.zero_thetas;
    j["degenerate_pairs"] = b.degenerate_pairs;
    j["coalesced_transitions"] = b.coalesced;
    j["no_contradiction"] = !b.beta_star_squared.has_value();
    j["heuristic_beta_squared"] = detail::jopt(rep.heuristic_beta_squared);
    nlohmann::json cands = nlohmann::json::object();
    for (const auto& c : rep.candidates) cands[c.name] = detail::optimality_json(c);
    j["candidates"] = cands;
    j["notes"] = rep.notes;

    std::vector<std::vector<std::string>> rows;
    for (const auto& p : rep.frechet) rows.push_back({detail::num(p.beta), detail::num(p.tau_pr_f), detail::num(p.tau_f_re)});
    out.csv("correlations.csv", {"beta", "tau_pr_fbeta", "tau_fbeta_re"}, rows);
    rows.clear();
    for (const auto& p : rep.frechet) rows.push_back({detail::num(p.beta), detail::num(p.variance)});
    out.csv("frechet.csv", {"beta", "frechet_variance"}, rows);
    rows.clear();
    for (const auto& c : rep.candidates) {
        const auto& o = c.optimality;
        rows.push_back({c.name, detail::num(o.p_no_choice()), detail::num(o.p_optimal()),
                        detail::num(o.p_not_optimal()), detail::num(o.degree())});
    }
    out.csv("optimality_bars.csv", {"candidate", "p_no_choice", "p_optimal", "p_not_optimal", "degree"}, rows);

    try {
        const auto path = build_path(set);
        j["plateaus"] = path.plateaus();
        j["middle_plateau"] = path.middle_plateau();
        detail::write_path_tables(out, set, path, detail::marker_rankings(set, b), &j);
    } catch (const InvalidArgument& e) {
        j["notes"].push_back(std::string("manifold skipped: ") + e.what());
    }

    if (cfg.format == Format::Json) {
        out.json("report.json", j);
    } else {
        rows.clear();
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_primitive()) rows.push_back({it.key(), it->dump()});
        }
        for (const auto& c : rep.candidates) {
            rows.push_back({"O(" + c.name + ")", detail::num(c.optimality.degree())});
        }
        rows.push_back({"config_hash", out.hash()});
        out.csv("report.csv", {"key", "value"}, rows);
    }
    return AnalyzeResult{std::move(rep), out.files()};
}

inline std::vector<std::string> manifold(const AnalysisConfig& cfg) {
    cfg.validate();
    const auto set = ingest(*cfg.input_path, IngestOptions{cfg.prior});
    const auto path = build_path(set);
    const auto best = optimal_beta(set);
    OutputWriter out(cfg);
    nlohmann::json j;
    j["command"] = "manifold";
    j["items"] = set.size();
    j["plateaus"] = path.plateaus();
    j["transition_betas"] = path.transition_betas;
    j["coalesced_transitions"] = path.coalesced;
    j["middle_plateau"] = path.middle_plateau();
    j["beta_star"] = detail::jopt(best.beta_star());
    detail::write_path_tables(out, set, path, detail::marker_rankings(set, best), &j);
    out.json("manifold.json", j);
    return out.files();
}

namespace detail {

inline const std::vector<double>& prior_grid() {
    static const std::vector<double> g{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    return g;
}

struct TauRow {
    std::string dist, s1, s2;
    McEstimate est;
    std::optional<double> target;
};

inline std::vector<std::string> tau_row(const TauRow& r) {
    return {r.dist, r.s1, r.s2, num(r.est.value), num(r.est.half_width), r.target ? num(*r.target) : ""};
}

}  // namespace detail

inline std::vector<std::string> sweep(const AnalysisConfig& cfg) {
    cfg.validate();
    const Family fam = *cfg.family;
    McOptions mc;
    mc.workers = cfg.workers;
    OutputWriter out(cfg);
    nlohmann::json j;
    j["command"] = "sweep";
    j["family"] = family_name(fam);
    j["pairs"] = cfg.n_pairs;
    const auto pr = ScoreFunction::precision(), re = ScoreFunction::recall();
    const auto f1 = ScoreFunction::f1(), sivf = ScoreFunction::sivf();
    using detail::num;

    if (fam == Family::Pi1 || fam == Family::Pi2) {
        std::vector<DistributionSpec> specs;
        if (fam == Family::Pi1) {
            if (cfg.param) throw InvalidArgument("pi1 takes no parameter");
            specs.push_back(DistributionSpec::pi1());
        } else if (cfg.param) {
            specs.push_back(DistributionSpec::pi2(*cfg.param));
        } else {
            for (double ptn : {0.0, 0.3, 0.6}) specs.push_back(DistributionSpec::pi2(ptn));
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& s : specs) {
            const bool detection = fam == Family::Pi2 && s.ptn() == 0.0;
            const std::optional<double> none;
            const detail::TauRow tr[] = {
                {s.name(), "Precision", "Recall", mc_tau(s, pr, re, cfg.n_pairs, cfg.seed, mc), 1.0 / 3.0},
                {s.name(), "Precision", "F1", mc_tau(s, pr, f1, cfg.n_pairs, cfg.seed, mc), 2.0 / 3.0},
                {s.name(), "F1", "Recall", mc_tau(s, f1, re, cfg.n_pairs, cfg.seed, mc), 2.0 / 3.0},
                {s.name(), "Precision", "SIVF", mc_tau(s, pr, sivf, cfg.n_pairs, cfg.seed, mc),
                 detection ? std::optional<double>(1.0 / 3.0) : none},
                {s.name(), "SIVF", "Recall", mc_tau(s, sivf, re, cfg.n_pairs, cfg.seed, mc),
                 detection ? std::optional<double>(1.0) : none},
            };
            for (const auto& r : tr) rows.push_back(detail::tau_row(r));
        }
        out.csv("taus.csv", {"distribution", "score_1", "score_2", "tau_mc", "half_width", "tau_expected"}, rows);
    } else if (fam == Family::Pi3 || fam == Family::Pi4) {
        const double ell_star = solve_optimal_ell(fam);
        j["optimal_ell"] = ell_star;
        j["f1_equidistance_prior"] = f1_equidistance_prior(fam);
        const auto sivf_opt = analytic_optimality(fam, 1.0);
        j["sivf_degree_of_optimality"] = sivf_opt.degree;

        std::vector<std::vector<std::string>> rows;
        for (int k = 0; k <= 120; ++k) {
            const double ell = std::pow(10.0, -3.0 + 6.0 * k / 120.0);
            rows.push_back({num(ell), num(analytic_tau(fam, TauPair::PrVsFBeta, ell)),
                            num(analytic_tau(fam, TauPair::FBetaVsRe, ell)),
                            num(analytic_frechet_variance(fam, ell))});
        }
        out.csv("ell_curve.csv", {"ell", "tau_pr_fbeta", "tau_fbeta_re", "frechet_variance"}, rows);

        rows.clear();
        std::vector<std::vector<std::string>> adapt;
        for (double p : detail::prior_grid()) {
            const double ell_f1 = p / (1.0 - p);
            rows.push_back({num(p), num(analytic_tau(fam, TauPair::PrVsFBeta, ell_f1)),
                            num(analytic_tau(fam, TauPair::FBetaVsRe, ell_f1)),
                            num(analytic_tau(fam, TauPair::PrVsFBeta, 1.0)),
                            num(analytic_tau(fam, TauPair::FBetaVsRe, 1.0))});
            const auto a = beta_adaptation(fam, p);
            adapt.push_back({num(p), num(a.beta_squared), num(a.b), num(1.0 - p), num(0.5)});
        }
        out.csv("equidistance.csv", {"prior_pos", "tau_pr_f1", "tau_f1_re", "tau_pr_sivf", "tau_sivf_re"}, rows);
        out.csv("adaptation.csv", {"prior_pos", "beta_squared", "b_optimal", "b_sivf", "b_f1"}, adapt);

        const double p = cfg.param.value_or(0.5);
        const auto spec = DistributionSpec::with_prior(fam, p);
        rows.clear();
        const auto pr_re = mc_tau(spec, pr, re, cfg.n_pairs, cfg.seed, mc);
        rows.push_back({num(p), "-", "Precision", "Recall", num(pr_re.value), num(pr_re.half_width),
                        num(analytic_tau_pr_re(fam))});
        for (double ell : {0.1, 0.25, ell_star, 1.0, 2.0, 5.0}) {
            const auto f = ScoreFunction::fbeta_squared(beta_squared_from_ell(ell, p));
            const auto a = mc_tau(spec, pr, f, cfg.n_pairs, cfg.seed, mc);
            const auto b = mc_tau(spec, f, re, cfg.n_pairs, cfg.seed, mc);
            rows.push_back({num(p), num(ell), "Precision", "Fbeta", num(a.value), num(a.half_width),
                            num(analytic_tau(fam, TauPair::PrVsFBeta, ell))});
            rows.push_back({num(p), num(ell), "Fbeta", "Recall", num(b.value), num(b.half_width),
                            num(analytic_tau(fam, TauPair::FBetaVsRe, ell))});
        }
        out.csv("mc_check.csv", {"prior_pos", "ell", "score_1", "score_2", "tau_mc", "half_width", "tau_analytic"},
                rows);
    } else {
        std::vector<std::vector<std::string>> rows, adapt, equi;
        std::vector<double> priors = detail::prior_grid();
        if (cfg.param) priors = {*cfg.param};
        for (double p : priors) {
            const auto spec = DistributionSpec::pi5(p);
            const auto e = mc_tau(spec, pr, re, cfg.n_pairs, cfg.seed, mc);
            rows.push_back({num(p), num(e.value), num(e.half_width), num(analytic_tau_pr_re_pi5(p))});
            const double ell = pi5_optimal_ell(p, cfg.n_pairs, cfg.seed, mc);
            const double b2 = beta_squared_from_ell(ell, p);
            adapt.push_back({num(p), num(ell), num(b2), num(std::sqrt(b2)), num(b_from_beta_squared(b2))});
            equi.push_back({num(p), num(mc_tau(spec, pr, f1, cfg.n_pairs, cfg.seed, mc).value),
                          num(mc_tau(spec, f1, re, cfg.n_pairs, cfg.seed, mc).value),
                          num(mc_tau(spec, pr, sivf, cfg.n_pairs, cfg.seed, mc).value),
                          num(mc_tau(spec, sivf, re, cfg.n_pairs, cfg.seed, mc).value)});
        }
        out.csv("pr_re.csv", {"prior_pos", "tau_mc", "half_width", "tau_analytic"}, rows);
        out.csv("adaptation.csv", {"prior_pos", "ell", "beta_squared", "beta", "b_optimal"}, adapt);
        out.csv("equidistance.csv", {"prior_pos", "tau_pr_f1", "tau_f1_re", "tau_pr_sivf", "tau_sivf_re"}, equi);
        if (!cfg.param) j["sivf_equidistance_prior"] = pi5_sivf_equidistance_prior(cfg.n_pairs, cfg.seed, mc);
    }
    out.json("summary.json", j);
    return out.files();
}

struct Table1Cell {
    std::string name;
    double target = 0.0;
    double tolerance = 0.0;
    double value = 0.0;
    bool pass = false;
};

struct Table1Result {
    std::vector<Table1Cell> cells;
    std::vector<std::string> files;

    bool all_pass() const {
        for (const auto& c : cells) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Degree of optimality of SIVF averaged over the prior grid, against the analytic optimum at each prior.
inline McOptimality sivf_optimality_over_priors(Family fam, std::uint64_t n_pairs, std::uint64_t seed,
                                                const McOptions& mc = {}) {
    const double ell_star = solve_optimal_ell(fam);
    McOptimality sum;
    const auto& priors = detail::prior_grid();
    for (std::size_t k = 0; k < priors.size(); ++k) {
        const double p = priors[k];
        const auto optimum = ScoreFunction::fbeta_squared(beta_squared_from_ell(ell_star, p));
        const auto o = mc_optimality(DistributionSpec::with_prior(fam, p), ScoreFunction::sivf(), optimum,
                                     std::max<std::uint64_t>(1, n_pairs / priors.size()), seed + k, mc);
        sum.no_choice += o.no_choice;
        sum.optimal += o.optimal;
        sum.not_optimal += o.not_optimal;
        sum.n_pairs += o.n_pairs;
    }
    return sum;
}

inline Table1Result table1(const AnalysisConfig& cfg) {
    cfg.validate();
    McOptions mc;
    mc.workers = cfg.workers;
    const auto n = cfg.n_pairs;
    const auto seed = cfg.seed;
    const auto pr = ScoreFunction::precision(), re = ScoreFunction::recall(), f1 = ScoreFunction::f1();
    Table1Result res;
    auto cell = [&](std::string name, double target, double tol, double value) {
        res.cells.push_back({std::move(name), target, tol, value, std::abs(value - target) <= tol});
    };

    for (const auto& spec : {DistributionSpec::pi1(), DistributionSpec::pi2(0.3)}) {
        const double t_pr_re = mc_tau(spec, pr, re, n, seed, mc).value;
        const double t1 = mc_tau(spec, pr, f1, n, seed, mc).value;
        const double t2 = mc_tau(spec, f1, re, n, seed, mc).value;
        cell(spec.name() + " tau(Pr;Re)", 1.0 / 3.0, 0.01, t_pr_re);
        cell(spec.name() + " F1 degree of optimality", 1.0, 0.01, optimality_from_taus(t1, t2, t_pr_re).degree);
    }
    {
        const auto s = sample(DistributionSpec::pi1(), seed, 100000);
        cell("pi1 heuristic beta^2 (selects F1)", 1.0, 0.02, heuristic_beta_squared(make_set(s)));
    }
    for (Family fam : {Family::Pi3, Family::Pi4}) {
        const std::string f = family_name(fam);
        const auto spec = DistributionSpec::with_prior(fam, 0.5);
        cell(f + " tau(Pr;Re)", analytic_tau_pr_re(fam), 0.01, mc_tau(spec, pr, re, n, seed, mc).value);
        const double target = fam == Family::Pi3 ? std::log(4.0) - 0.5 : 5.0 / 6.0;
        cell(f + " SIVF degree of optimality (Monte Carlo)", target, 0.01,
             sivf_optimality_over_priors(fam, n, seed, mc).degree());
        cell(f + " SIVF degree of optimality (closed form)", target, 0.01, analytic_optimality(fam, 1.0).degree);
        cell(f + " F1 equidistance prior", fam == Family::Pi3 ? 0.381 : 0.325, 0.01, f1_equidistance_prior(fam));
        const auto s = sample(DistributionSpec::with_prior(fam, 0.3), seed, 100000);
        cell(f + "(0.3) heuristic beta^2 (selects SIVF)", 0.7 / 0.3, 0.02 * 0.7 / 0.3,
             heuristic_beta_squared(make_set(s)));
    }
    {
        const double t = mc_tau(DistributionSpec::pi5(0.5), pr, re, n, seed, mc).value;
        cell("pi5(0.5) tau(Pr;Re) vs closed form", analytic_tau_pr_re_pi5(0.5), 0.01, t);
        cell("pi5 SIVF equidistance prior", 0.561, 0.02, pi5_sivf_equidistance_prior(n, seed, mc));
    }

    OutputWriter out(cfg);
    std::vector<std::vector<std::string>> rows;
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : res.cells) {
        rows.push_back({"\"" + c.name + "\"", detail::num(c.target), detail::num(c.tolerance), detail::num(c.value),
                        c.pass ? "pass" : "FAIL"});
        cells.push_back({{"cell", c.name}, {"target", c.target}, {"tolerance", c.tolerance}, {"value", c.value},
                         {"pass", c.pass}});
    }
    out.csv("table1.csv", {"cell", "target", "tolerance", "value", "status"}, rows);
    out.json("table1.json", {{"command", "table1"}, {"pairs", n}, {"cells", cells}, {"all_pass", res.all_pass()}});
    res.files = out.files();
    return res;
}

}  // namespace fbopt::app
