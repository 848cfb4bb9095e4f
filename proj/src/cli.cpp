// SPDX-License-Identifier: Apache-2.0

#include "tierbo/cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "tierbo/config.hpp"
#include "tierbo/errors.hpp"
#include "tierbo/report.hpp"
#include "tierbo/scalar.hpp"
#include "tierbo/sha256.hpp"
#include "tierbo/surfaces.hpp"

namespace tierbo {

namespace fs = std::filesystem;

namespace {

std::string campaign_dir_name(const CampaignConfig& config) {
    std::string name = config.surface;
    if (config.starred) name += "_star";
    return name + "_" + to_string(config.strategy);
}

// The CSV's psi_* columns hold raw objective values in hierarchy order; the
// hierarchy's direction/normalization transforms map them onto (psi, t).
Eigen::VectorXd derived_row(const CsvTable& table, const std::vector<int>& psi_cols,
                            std::size_t row, const Hierarchy& hierarchy,
                            Eigen::VectorXd* thresholds) {
    const int n = hierarchy.size();
    Eigen::VectorXd psi(n);
    if (thresholds) thresholds->resize(n);
    for (int j = 0; j < n; ++j) {
        const auto& spec = hierarchy.objectives[j];
        double v = parse_double(table.rows[row][static_cast<std::size_t>(psi_cols[j])]);
        double t = spec.threshold;
        double lo = spec.norm_bounds ? spec.norm_bounds->first : 0.0;
        double hi = spec.norm_bounds ? spec.norm_bounds->second : 1.0;
        if (spec.direction == Direction::Minimize) {
            v = -v;
            t = -t;
            const double new_lo = -hi;
            hi = -lo;
            lo = new_lo;
        }
        if (spec.norm_bounds) {
            v = (v - lo) / (hi - lo);
            t = (t - lo) / (hi - lo);
        }
        psi[j] = v;
        if (thresholds) (*thresholds)[j] = t;
    }
    return psi;
}

}  // namespace

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = load_run_config(options.config_path);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    }

    // Apply CLI overrides before expansion.
    if (options.strategy) {
        try {
            config.strategies = {strategy_from_string(*options.strategy)};
        } catch (const NotFoundError& e) {
            err << e.what() << "\n";
            return kExitUsage;
        }
    }
    if (options.budget) config.budget = *options.budget;
    if (options.repeats) config.repeats = *options.repeats;
    if (options.k) config.k = *options.k;
    if (options.mc_samples) config.mc_samples = *options.mc_samples;
    if (options.exact) config.exact_score = *options.exact;
    if (options.seed) config.seed = *options.seed;

    const std::uint64_t master_seed = config.seed.value_or(0);
    std::vector<CampaignConfig> campaigns;
    try {
        campaigns = config.expand(master_seed);
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<ManifestEntry> entries;
    std::vector<std::string> warnings;
    const fs::path out_dir(options.out_dir);
    int exit_code = kExitOk;
    try {
        fs::create_directories(out_dir);
        for (const auto& campaign : campaigns) {
            const std::string dir_name = campaign_dir_name(campaign);
            const fs::path dir = out_dir / dir_name;
            fs::create_directories(dir);
            out << "running " << dir_name << " (budget " << campaign.budget << ", repeats "
                << campaign.repeats << ")\n";
            const CampaignResult result = run_campaign(campaign, options.jobs);

            const std::string trajectory = trajectory_csv(result);
            write_text_file(dir / "trajectory.csv", trajectory);
            entries.push_back({dir_name + "/trajectory.csv", sha256_hex(trajectory),
                               trajectory.size()});

            int fallbacks = 0;
            for (const auto& rep : result.repeats) fallbacks += rep.fallback_count;
            if (fallbacks > 0) {
                warnings.push_back(dir_name + ": " + std::to_string(fallbacks) +
                                   " iterations fell back to Sobol after numerical failure");
            }

            if (result.config.repeats >= 2) {
                const AggregateCurves curves = aggregate(result.repeats);
                const std::string summary = summary_json(result, curves);
                write_text_file(dir / "summary.json", summary);
                entries.push_back(
                    {dir_name + "/summary.json", sha256_hex(summary), summary.size()});
                if (options.write_svg) {
                    const std::string svg = convergence_svg(curves, dir_name);
                    write_text_file(dir / "convergence.svg", svg);
                    entries.push_back(
                        {dir_name + "/convergence.svg", sha256_hex(svg), svg.size()});
                }
            }
        }
    } catch (const std::exception& e) {
        err << "runtime error: " << e.what() << "\n";
        warnings.push_back(std::string("run aborted: ") + e.what());
        exit_code = kExitRuntime;
    }

    const std::string config_hash = sha256_hex(canonical_config_json(config));
    write_text_file(out_dir / "manifest.json",
                    manifest_json(config_hash, master_seed, entries, warnings));
    return exit_code;
}

int cmd_score(const ScoreOptions& options, std::ostream& out, std::ostream& err) {
    Hierarchy hierarchy;
    CsvTable table;
    try {
        hierarchy = load_hierarchy(options.hierarchy_path);
        table = read_csv(options.csv_path);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    const int n = hierarchy.size();
    std::vector<int> psi_cols;
    for (int j = 0; j < n; ++j) {
        const int col = table.column("psi_" + std::to_string(j));
        if (col < 0) {
            err << "error: csv is missing column psi_" << j << " required by the hierarchy\n";
            return kExitUsage;
        }
        psi_cols.push_back(col);
    }

    try {
        std::vector<Eigen::VectorXd> psis(table.rows.size());
        Eigen::VectorXd thresholds;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            psis[r] = derived_row(table, psi_cols, r, hierarchy, &thresholds);
        }
        const ScoreParams params{.k = options.k, .exact = options.exact};
        const std::vector<double> chis =
            table.rows.empty() ? std::vector<double>{} : chimera_score(psis, thresholds);
        table.header.push_back("botier");
        table.header.push_back("chimera");
        table.header.push_back("penalty");
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            table.rows[r].push_back(format_double(botier_score(psis[r], thresholds, params)));
            table.rows[r].push_back(format_double(chis[r]));
            table.rows[r].push_back(format_double(penalty_score(psis[r], thresholds)));
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string csv = to_csv(table);
    if (options.out_path) {
        write_text_file(*options.out_path, csv);
    } else {
        out << csv;
    }
    return kExitOk;
}

int cmd_correlate(const CorrelateOptions& options, std::ostream& out, std::ostream& err) {
    RankCorrelationResult result;
    try {
        result = rank_correlation_study(options.surface, options.starred, options.n_points);
    } catch (const NotFoundError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    if (std::isnan(result.spearman_r)) {
        err << "warning: rank correlation undefined (constant scores)\n";
    }
    out << "surface=" << options.surface << (options.starred ? "*" : "") << " n="
        << options.n_points << " spearman_r=" << format_double(result.spearman_r) << "\n";

    if (options.out_path) {
        CsvTable grid;
        const Eigen::Index d = result.X.cols();
        const Eigen::Index m = result.Y.cols();
        const Eigen::Index n_obj = result.psi.front().size();
        for (Eigen::Index i = 0; i < d; ++i) grid.header.push_back("x_" + std::to_string(i));
        for (Eigen::Index i = 0; i < m; ++i) grid.header.push_back("y_" + std::to_string(i));
        for (Eigen::Index i = 0; i < n_obj; ++i)
            grid.header.push_back("psi_" + std::to_string(i));
        grid.header.push_back("xi_exact");
        grid.header.push_back("chimera");
        for (Eigen::Index r = 0; r < result.X.rows(); ++r) {
            std::vector<std::string> row;
            for (Eigen::Index i = 0; i < d; ++i) row.push_back(format_double(result.X(r, i)));
            for (Eigen::Index i = 0; i < m; ++i) row.push_back(format_double(result.Y(r, i)));
            for (Eigen::Index i = 0; i < n_obj; ++i)
                row.push_back(format_double(result.psi[static_cast<std::size_t>(r)][i]));
            row.push_back(format_double(result.xi[static_cast<std::size_t>(r)]));
            row.push_back(format_double(result.chi[static_cast<std::size_t>(r)]));
            grid.rows.push_back(std::move(row));
        }
        write_text_file(*options.out_path, to_csv(grid));
    }
    return kExitOk;
}

int cmd_surfaces_list(std::ostream& out) {
    for (const std::string& name : surface_names()) {
        const SurfaceDef& def = surface(name);
        for (const bool starred : {false, true}) {
            const Hierarchy h = default_hierarchy(name, starred);
            out << name << (starred ? "*" : "") << "  inputs=" << def.input_dim
                << " outputs=" << def.output_dim << " bounds=";
            for (Eigen::Index i = 0; i < def.lower.size(); ++i) {
                out << (i ? "," : "[") << "(" << format_double(def.lower[i]) << ","
                    << format_double(def.upper[i]) << ")";
            }
            out << "] objectives=";
            for (int j = 0; j < h.size(); ++j) {
                const auto& spec = h.objectives[j];
                out << (j ? ";" : "") << spec.name
                    << (spec.direction == Direction::Maximize ? ">" : "<")
                    << format_double(spec.threshold);
            }
            out << "\n";
        }
    }
    return kExitOk;
}

}  // namespace tierbo
