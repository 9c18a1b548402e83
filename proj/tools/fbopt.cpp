#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fbopt/fbopt.hpp"

namespace {

using fbopt::app::AnalysisConfig;
using fbopt::app::Command;

void add_grid(CLI::App* sub, AnalysisConfig& cfg, bool& linear) {
    sub->add_option("--beta-min", cfg.beta_grid.min, "smallest beta of the Frechet grid");
    sub->add_option("--beta-max", cfg.beta_grid.max, "largest beta of the Frechet grid");
    sub->add_option("--beta-points", cfg.beta_grid.points, "number of grid points");
    sub->add_flag("--linear-grid", linear, "space the grid linearly instead of logarithmically");
}

void print_files(const std::vector<std::string>& files) {
    for (const auto& f : files) std::cout << "wrote " << f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Optimal precision/recall tradeoffs with F-beta"};
    cli.require_subcommand(1);

    AnalysisConfig cfg;
    std::string format = "json";
    std::string family;
    bool linear = false;

    auto* analyze = cli.add_subcommand("analyze", "optimal beta and degree of optimality for a performance table");
    analyze->add_option("--input", cfg.input_path, "CSV with tn,fp,fn,tp or fpr,tpr[,prior_pos]")->required();
    analyze->add_option("--prior", cfg.prior, "positive-class prior for ROC files without a prior_pos column");
    analyze->add_option("--beta", cfg.betas, "extra beta values to score")->take_all();
    analyze->add_option("--out", cfg.output_dir, "output directory")->required();
    analyze->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
    add_grid(analyze, cfg, linear);

    auto* sweep = cli.add_subcommand("sweep", "rank correlations under a distribution family");
    sweep->add_option("--family", family, "pi1|pi2|pi3|pi4|pi5")->required();
    sweep->add_option("--param", cfg.param, "ptn for pi2, positive prior for pi3-pi5");
    sweep->add_option("--pairs", cfg.n_pairs, "Monte Carlo pairs per estimate");
    sweep->add_option("--seed", cfg.seed, "random seed");
    sweep->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", cfg.output_dir, "output directory")->required();

    auto* manifold = cli.add_subcommand("manifold", "ranking path, rank trajectories and PCA coordinates");
    manifold->add_option("--input", cfg.input_path, "performance CSV")->required();
    manifold->add_option("--prior", cfg.prior, "positive-class prior for ROC files");
    manifold->add_option("--out", cfg.output_dir, "output directory")->required();

    auto* table1 = cli.add_subcommand("table1", "check the summary table cells");
    table1->add_option("--seed", cfg.seed, "random seed");
    std::uint64_t table1_pairs = 1000000;
    table1->add_option("--pairs", table1_pairs, "Monte Carlo pairs per estimate");
    table1->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    table1->add_option("--out", cfg.output_dir, "output directory")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = cli.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        cfg.format = format == "csv" ? fbopt::app::Format::Csv : fbopt::app::Format::Json;
        cfg.beta_grid.log_spaced = !linear;
        if (*analyze) {
            cfg.command = Command::Analyze;
            const auto r = fbopt::app::analyze(cfg);
            const auto& b = r.report.best;
            if (b.beta_star()) {
                std::printf("beta* = %.6g  (beta*^2 in [%.6g, %.6g])\n", *b.beta_star(), b.interval_lo, b.interval_hi);
            } else {
                std::printf("precision and recall agree on every pair; any beta is optimal\n");
            }
            std::printf("tau(Pr;Re) = %.6g\n", r.report.tau_pr_re);
            for (const auto& c : r.report.candidates) {
                std::printf("O(%s) = %.6g\n", c.name.c_str(), c.optimality.degree());
            }
            print_files(r.files);
        } else if (*sweep) {
            cfg.command = Command::Sweep;
            cfg.family = fbopt::parse_family(family);
            print_files(fbopt::app::sweep(cfg));
        } else if (*manifold) {
            cfg.command = Command::Manifold;
            print_files(fbopt::app::manifold(cfg));
        } else if (*table1) {
            cfg.command = Command::Table1;
            cfg.n_pairs = table1_pairs;
            const auto r = fbopt::app::table1(cfg);
            for (const auto& c : r.cells) {
                std::printf("%-4s %-48s %.6g (target %.6g +/- %.3g)\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                            c.value, c.target, c.tolerance);
            }
            print_files(r.files);
            if (!r.all_pass()) return 3;
        }
    } catch (const fbopt::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
