// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tierbo {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;          // --seed beats config beats TIERBO_SEED
    std::optional<std::string> strategy;        // overrides
    std::optional<int> budget;
    std::optional<int> repeats;
    std::optional<double> k;
    std::optional<int> mc_samples;
    std::optional<bool> exact;
    int jobs = 1;
    bool write_svg = true;
};

struct ScoreOptions {
    std::string csv_path;
    std::string hierarchy_path;
    std::optional<std::string> out_path;  // default: stdout
    double k = 100.0;
    bool exact = false;
};

struct CorrelateOptions {
    std::string surface;
    bool starred = false;
    int n_points = 10000;
    std::optional<std::string> out_path;  // grid CSV
};

int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);
int cmd_score(const ScoreOptions& options, std::ostream& out, std::ostream& err);
int cmd_correlate(const CorrelateOptions& options, std::ostream& out, std::ostream& err);
int cmd_surfaces_list(std::ostream& out);

}  // namespace tierbo
