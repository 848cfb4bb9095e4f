// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

#include "tierbo/campaign.hpp"

namespace tierbo {

/// Raised for malformed config files; the message carries the JSON pointer
/// (or parser line/column) of the offending entry.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Declarative benchmark definition: the cross product of `surfaces` and
/// `strategies` with shared protocol settings.
struct RunConfig {
    std::vector<std::string> surfaces;
    bool starred = false;
    std::vector<Strategy> strategies;
    std::optional<Hierarchy> hierarchy;
    int budget = 50;
    int n_seed = 1;
    int repeats = 50;
    double k = 100.0;
    int mc_samples = 128;
    bool exact_score = false;
    std::optional<std::uint64_t> seed;

    std::vector<CampaignConfig> expand(std::uint64_t master_seed) const;
};

/// Parses and validates a config document.  Unknown keys are rejected.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// Canonical JSON form of the config (sorted keys), used for manifest hashes.
std::string canonical_config_json(const RunConfig& config);

/// Hierarchy <-> JSON. `source` is either "output:<m>" or an object with a
/// dense "coeffs" list and optional "constant".
nlohmann::json hierarchy_to_json(const Hierarchy& hierarchy);
Hierarchy hierarchy_from_json(const nlohmann::json& node, const std::string& where);

/// Loads a hierarchy from a file holding either a bare objective array or an
/// object with a "hierarchy" key.
Hierarchy load_hierarchy(const std::string& path);

}  // namespace tierbo
