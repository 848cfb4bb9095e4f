// SPDX-License-Identifier: Apache-2.0

#include "tierbo/config.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace tierbo {

using nlohmann::json;

namespace {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void reject_unknown_keys(const json& node, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : node.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            throw ConfigError("at " + where + ": unknown key \"" + key + "\"");
        }
    }
}

template <typename T>
T get_as(const json& node, const std::string& key, const std::string& where) {
    try {
        return node.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError("at " + where + "/" + key + ": " + e.what());
    }
}

template <typename T>
void maybe_read(const json& node, const std::string& key, const std::string& where, T& out) {
    if (node.contains(key)) {
        out = get_as<T>(node, key, where);
    }
}

std::vector<std::string> read_string_or_list(const json& node, const std::string& scalar_key,
                                             const std::string& list_key,
                                             const std::string& where) {
    if (node.contains(scalar_key) && node.contains(list_key)) {
        throw ConfigError("at " + where + ": give either \"" + scalar_key + "\" or \"" +
                          list_key + "\", not both");
    }
    if (node.contains(scalar_key)) {
        return {get_as<std::string>(node, scalar_key, where)};
    }
    if (node.contains(list_key)) {
        return get_as<std::vector<std::string>>(node, list_key, where);
    }
    return {};
}

}  // namespace

json hierarchy_to_json(const Hierarchy& hierarchy) {
    json list = json::array();
    for (const auto& spec : hierarchy.objectives) {
        json obj;
        obj["name"] = spec.name;
        if (spec.source.kind == ObjectiveSource::Kind::Output) {
            obj["source"] = "output:" + std::to_string(spec.source.output_index);
        } else {
            int max_index = -1;
            for (const auto& [idx, c] : spec.source.coeffs) {
                (void)c;
                max_index = std::max(max_index, idx);
            }
            std::vector<double> dense(static_cast<std::size_t>(max_index + 1), 0.0);
            for (const auto& [idx, c] : spec.source.coeffs) {
                dense[static_cast<std::size_t>(idx)] = c;
            }
            json src;
            src["coeffs"] = dense;
            if (spec.source.constant != 0.0) src["constant"] = spec.source.constant;
            obj["source"] = src;
        }
        obj["direction"] = spec.direction == Direction::Maximize ? "max" : "min";
        obj["threshold"] = spec.threshold;
        if (spec.norm_bounds) {
            obj["norm_bounds"] = {spec.norm_bounds->first, spec.norm_bounds->second};
        }
        list.push_back(obj);
    }
    return list;
}

Hierarchy hierarchy_from_json(const json& node, const std::string& where) {
    if (!node.is_array() || node.empty()) {
        throw ConfigError("at " + where + ": hierarchy must be a non-empty array");
    }
    Hierarchy hierarchy;
    int index = 0;
    for (const auto& entry : node) {
        const std::string here = where + "/" + std::to_string(index++);
        if (!entry.is_object()) {
            throw ConfigError("at " + here + ": objective must be an object");
        }
        reject_unknown_keys(entry, {"name", "source", "direction", "threshold", "norm_bounds"},
                            here);
        ObjectiveSpec spec;
        spec.name = get_as<std::string>(entry, "name", here);
        if (!entry.contains("source")) {
            throw ConfigError("at " + here + ": missing \"source\"");
        }
        const json& src = entry.at("source");
        if (src.is_string()) {
            const std::string text = src.get<std::string>();
            if (text.rfind("output:", 0) != 0) {
                throw ConfigError("at " + here + "/source: expected \"output:<m>\"");
            }
            try {
                spec.source = ObjectiveSource::output(std::stoi(text.substr(7)));
            } catch (const std::exception&) {
                throw ConfigError("at " + here + "/source: bad output index");
            }
        } else if (src.is_object()) {
            reject_unknown_keys(src, {"coeffs", "constant"}, here + "/source");
            const auto dense = get_as<std::vector<double>>(src, "coeffs", here + "/source");
            std::vector<std::pair<int, double>> coeffs;
            for (std::size_t i = 0; i < dense.size(); ++i) {
                if (dense[i] != 0.0) coeffs.emplace_back(static_cast<int>(i), dense[i]);
            }
            double constant = 0.0;
            maybe_read(src, "constant", here + "/source", constant);
            spec.source = ObjectiveSource::input_affine(std::move(coeffs), constant);
        } else {
            throw ConfigError("at " + here + "/source: expected string or object");
        }
        const std::string dir = get_as<std::string>(entry, "direction", here);
        if (dir == "max") {
            spec.direction = Direction::Maximize;
        } else if (dir == "min") {
            spec.direction = Direction::Minimize;
        } else {
            throw ConfigError("at " + here + "/direction: expected \"max\" or \"min\"");
        }
        spec.threshold = get_as<double>(entry, "threshold", here);
        if (entry.contains("norm_bounds")) {
            const auto bounds = get_as<std::vector<double>>(entry, "norm_bounds", here);
            if (bounds.size() != 2 || !(bounds[0] < bounds[1])) {
                throw ConfigError("at " + here + "/norm_bounds: expected [lo, hi] with lo < hi");
            }
            spec.norm_bounds = {bounds[0], bounds[1]};
        }
        hierarchy.objectives.push_back(std::move(spec));
    }
    return hierarchy;
}

RunConfig parse_run_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(e.what());  // nlohmann reports line/column
    }
    if (!doc.is_object()) {
        throw ConfigError("config root must be an object");
    }
    reject_unknown_keys(doc,
                        {"surface", "surfaces", "starred", "strategy", "strategies",
                         "hierarchy", "budget", "n_seed", "repeats", "k", "mc_samples",
                         "exact", "seed"},
                        "/");

    RunConfig config;
    config.surfaces = read_string_or_list(doc, "surface", "surfaces", "/");
    if (config.surfaces.empty()) {
        throw ConfigError("at /: missing \"surface\" (or \"surfaces\")");
    }
    const auto strategy_strings = read_string_or_list(doc, "strategy", "strategies", "/");
    if (strategy_strings.empty()) {
        throw ConfigError("at /: missing \"strategy\" (or \"strategies\")");
    }
    for (const auto& name : strategy_strings) {
        try {
            config.strategies.push_back(strategy_from_string(name));
        } catch (const std::exception&) {
            throw ConfigError("at /strategy: unknown strategy \"" + name + "\"");
        }
    }
    maybe_read(doc, "starred", "/", config.starred);
    maybe_read(doc, "budget", "/", config.budget);
    maybe_read(doc, "n_seed", "/", config.n_seed);
    maybe_read(doc, "repeats", "/", config.repeats);
    maybe_read(doc, "k", "/", config.k);
    maybe_read(doc, "mc_samples", "/", config.mc_samples);
    maybe_read(doc, "exact", "/", config.exact_score);
    if (doc.contains("seed")) {
        config.seed = get_as<std::uint64_t>(doc, "seed", "/");
    }
    if (doc.contains("hierarchy")) {
        if (config.surfaces.size() != 1) {
            throw ConfigError("at /hierarchy: overrides require a single surface");
        }
        config.hierarchy = hierarchy_from_json(doc.at("hierarchy"), "/hierarchy");
    }
    return config;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

std::vector<CampaignConfig> RunConfig::expand(std::uint64_t master_seed) const {
    std::vector<CampaignConfig> campaigns;
    for (const auto& surface_name : surfaces) {
        for (const Strategy strategy : strategies) {
            CampaignConfig c;
            c.surface = surface_name;
            c.starred = starred;
            c.hierarchy = hierarchy;
            c.strategy = strategy;
            c.budget = budget;
            c.n_seed = n_seed;
            c.repeats = repeats;
            c.k = k;
            c.mc_samples = mc_samples;
            c.exact_score = exact_score;
            // Distinct deterministic stream per campaign.
            c.master_seed = splitmix64(
                master_seed ^ splitmix64(fnv1a(surface_name + "/" + to_string(strategy))));
            c.validate();
            campaigns.push_back(std::move(c));
        }
    }
    return campaigns;
}

std::string canonical_config_json(const RunConfig& config) {
    json doc;
    doc["surfaces"] = config.surfaces;
    doc["starred"] = config.starred;
    json strategies = json::array();
    for (const Strategy s : config.strategies) strategies.push_back(to_string(s));
    doc["strategies"] = strategies;
    if (config.hierarchy) doc["hierarchy"] = hierarchy_to_json(*config.hierarchy);
    doc["budget"] = config.budget;
    doc["n_seed"] = config.n_seed;
    doc["repeats"] = config.repeats;
    doc["k"] = config.k;
    doc["mc_samples"] = config.mc_samples;
    doc["exact"] = config.exact_score;
    if (config.seed) doc["seed"] = *config.seed;
    return doc.dump();  // nlohmann objects iterate in sorted key order
}

Hierarchy load_hierarchy(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read hierarchy file: " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string(e.what()));
    }
    if (doc.is_object() && doc.contains("hierarchy")) {
        reject_unknown_keys(doc, {"hierarchy"}, "/");
        return hierarchy_from_json(doc.at("hierarchy"), "/hierarchy");
    }
    return hierarchy_from_json(doc, "/");
}

}  // namespace tierbo
