// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tierbo/campaign.hpp"

namespace tierbo {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

/// Strict double parser (full-token match).
double parse_double(const std::string& text);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path);
std::string to_csv(const CsvTable& table);
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

/// trajectory.csv: one row per (repeat, iteration), columns
/// repeat,iter,x_*,y_*,psi_*,xi_exact,best_xi,n_satisfied_best,cum_max_n.
std::string trajectory_csv(const CampaignResult& result);

/// Aggregate curves as a JSON document.
std::string summary_json(const CampaignResult& result, const AggregateCurves& curves);

/// Minimal convergence plot: mean best-so-far score with a standard-error
/// band over iterations.
std::string convergence_svg(const AggregateCurves& curves, const std::string& title);

struct ManifestEntry {
    std::string path;  // relative to the manifest
    std::string sha256;
    std::uint64_t bytes = 0;
};

std::string manifest_json(const std::string& config_hash, std::uint64_t master_seed,
                          const std::vector<ManifestEntry>& files,
                          const std::vector<std::string>& warnings);

}  // namespace tierbo
