// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tierbo/objectives.hpp"

namespace tierbo {

enum class Strategy {
    BotierComposite,
    BotierBlackbox,
    ChimeraBlackbox,
    PenaltyBlackbox,
    PenaltyComposite,
    Ehvi,
    Sobol,
};

Strategy strategy_from_string(const std::string& name);
std::string to_string(Strategy strategy);
std::vector<std::string> strategy_names();

struct CampaignConfig {
    std::string surface;
    bool starred = false;
    std::optional<Hierarchy> hierarchy;  // defaults to the surface's reference hierarchy
    Strategy strategy = Strategy::BotierComposite;
    int budget = 50;
    int n_seed = 1;
    int repeats = 50;
    double k = 100.0;
    int mc_samples = 128;
    bool exact_score = false;  // hard min/step inside the composite utility
    std::uint64_t master_seed = 0;

    void validate() const;
    Hierarchy resolved_hierarchy() const;
};

/// One evaluated experiment plus the running metrics extracted from the
/// observation log alone (never from strategy internals).
struct IterationRecord {
    int iteration = 0;  // 1-based experiment count
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    Eigen::VectorXd psi;
    double xi_exact = 0.0;
    double best_xi = 0.0;       // non-decreasing
    int n_satisfied_best = 0;   // of the best-so-far-by-xi point
    int cum_max_n = 0;          // max n_satisfied over any observed point
};

struct RepeatResult {
    std::vector<IterationRecord> records;
    std::vector<int> first_hit;  // per n in 1..N; censored values are budget+1
    int fallback_count = 0;      // iterations recovered via the Sobol fallback
};

struct CampaignResult {
    CampaignConfig config;
    std::vector<RepeatResult> repeats;
};

/// Runs all repeats of the configured campaign.  Repeats are independent and
/// deterministic functions of (config, repeat index), so `jobs > 1`
/// parallelizes them without changing any result.
CampaignResult run_campaign(const CampaignConfig& config, int jobs = 1);

struct AggregateCurves {
    std::vector<double> mean_best_xi;                 // per iteration
    std::vector<double> se_best_xi;                   // standard error across repeats
    std::vector<std::vector<double>> satisfaction_probability;  // [n-1][iteration]
    std::vector<std::array<double, 3>> first_hit_quantiles;     // per n: p25/p50/p75
    std::vector<int> censored_counts;                 // per n: repeats that never hit
    int total_fallbacks = 0;
};

/// Pure reduction over repeats.  Throws std::invalid_argument when repeat
/// budgets disagree or fewer than two repeats are supplied.
AggregateCurves aggregate(const std::vector<RepeatResult>& repeats);

struct RankCorrelationResult {
    double spearman_r = 0.0;
    Eigen::MatrixXd X;
    Eigen::MatrixXd Y;
    std::vector<Eigen::VectorXd> psi;
    std::vector<double> xi;
    std::vector<double> chi;
};

/// Evaluates exact BoTier and Chimera scores on an unscrambled Sobol grid
/// over the surface and returns their Spearman rank correlation.
RankCorrelationResult rank_correlation_study(const std::string& surface, bool starred,
                                             int n_points = 10000);

}  // namespace tierbo
