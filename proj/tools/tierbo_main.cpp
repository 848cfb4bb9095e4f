// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "tierbo/cli.hpp"
#include "tierbo/version.hpp"

namespace {

std::optional<std::uint64_t> env_seed() {
    const char* value = std::getenv("TIERBO_SEED");
    if (value == nullptr || *value == '\0') return std::nullopt;
    try {
        return std::stoull(value);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tiered-scalarization Bayesian optimization benchmark"};
    app.set_version_flag("--version", std::string(tierbo::kVersion));
    app.require_subcommand(1);

    tierbo::RunOptions run_options;
    std::uint64_t seed_value = 0;
    auto* run = app.add_subcommand("run", "Run configured benchmark campaigns");
    run->add_option("--config", run_options.config_path, "Config file (JSON)")->required();
    run->add_option("--out", run_options.out_dir, "Output directory")->required();
    auto* seed_opt = run->add_option("--seed", seed_value, "Master seed override");
    run->add_option("--jobs", run_options.jobs, "Concurrent repeats")->check(CLI::PositiveNumber);
    std::string strategy_override;
    auto* strat_opt = run->add_option("--strategy", strategy_override, "Strategy override");
    int budget_override = 0;
    auto* budget_opt = run->add_option("--budget", budget_override, "Budget override");
    int repeats_override = 0;
    auto* repeats_opt = run->add_option("--repeats", repeats_override, "Repeats override");
    double k_override = 0.0;
    auto* k_opt = run->add_option("--k", k_override, "Smoothness override");
    int mc_override = 0;
    auto* mc_opt = run->add_option("--mc-samples", mc_override, "MC sample count override");
    bool exact_flag = false;
    auto* exact_opt = run->add_flag("--exact", exact_flag, "Hard min/step in composite scoring");
    bool no_svg = false;
    run->add_flag("--no-svg", no_svg, "Skip convergence plots");

    tierbo::ScoreOptions score_options;
    auto* score = app.add_subcommand("score", "Append scalarization scores to a CSV");
    score->add_option("csv", score_options.csv_path, "Input CSV with psi_* columns")->required();
    score->add_option("--hierarchy", score_options.hierarchy_path, "Hierarchy file (JSON)")
        ->required();
    score->add_option("--out", score_options.out_path, "Output CSV (default stdout)");
    score->add_option("--k", score_options.k, "Smoothness parameter");
    score->add_flag("--exact", score_options.exact, "Hard min/step scoring");

    tierbo::CorrelateOptions corr_options;
    auto* correlate = app.add_subcommand("correlate", "Tiered-vs-additive rank correlation");
    correlate->add_option("surface", corr_options.surface, "Surface name")->required();
    correlate->add_flag("--starred", corr_options.starred, "Include the input-derived objective");
    correlate->add_option("--n", corr_options.n_points, "Grid size")->check(CLI::PositiveNumber);
    correlate->add_option("--out", corr_options.out_path, "Write the scored grid CSV here");

    auto* surfaces = app.add_subcommand("surfaces", "Surface registry");
    auto* surfaces_list = surfaces->add_subcommand("list", "List registered surfaces");
    surfaces->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? tierbo::kExitOk : tierbo::kExitUsage;
    }

    if (run->parsed()) {
        if (*seed_opt) {
            run_options.seed = seed_value;
        } else if (auto seed = env_seed()) {
            run_options.seed = *seed;
        }
        if (*strat_opt) run_options.strategy = strategy_override;
        if (*budget_opt) run_options.budget = budget_override;
        if (*repeats_opt) run_options.repeats = repeats_override;
        if (*k_opt) run_options.k = k_override;
        if (*mc_opt) run_options.mc_samples = mc_override;
        if (*exact_opt) run_options.exact = exact_flag;
        run_options.write_svg = !no_svg;
        return tierbo::cmd_run(run_options, std::cout, std::cerr);
    }
    if (score->parsed()) {
        return tierbo::cmd_score(score_options, std::cout, std::cerr);
    }
    if (correlate->parsed()) {
        return tierbo::cmd_correlate(corr_options, std::cout, std::cerr);
    }
    if (surfaces->parsed() && surfaces_list->parsed()) {
        return tierbo::cmd_surfaces_list(std::cout);
    }
    return tierbo::kExitUsage;
}
