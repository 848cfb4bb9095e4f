// SPDX-License-Identifier: Apache-2.0

#include "tierbo/report.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tierbo/version.hpp"

namespace tierbo {

using nlohmann::json;

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end) {
        throw std::invalid_argument("not a number: \"" + text + "\"");
    }
    return value;
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read csv file: " + path);
    }
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            table.header = split_csv_line(line);
            first = false;
        } else {
            table.rows.push_back(split_csv_line(line));
        }
    }
    return table;
}

std::string to_csv(const CsvTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out.push_back(',');
        out += table.header[i];
    }
    out.push_back('\n');
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += row[i];
        }
        out.push_back('\n');
    }
    return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path.string());
    }
    out << content;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string trajectory_csv(const CampaignResult& result) {
    std::string out = "repeat,iter";
    const auto& first = result.repeats.front().records.front();
    for (Eigen::Index i = 0; i < first.x.size(); ++i) out += ",x_" + std::to_string(i);
    for (Eigen::Index i = 0; i < first.y.size(); ++i) out += ",y_" + std::to_string(i);
    for (Eigen::Index i = 0; i < first.psi.size(); ++i) out += ",psi_" + std::to_string(i);
    out += ",xi_exact,best_xi,n_satisfied_best,cum_max_n\n";
    for (std::size_t r = 0; r < result.repeats.size(); ++r) {
        for (const auto& rec : result.repeats[r].records) {
            out += std::to_string(r);
            out += ',' + std::to_string(rec.iteration);
            for (Eigen::Index i = 0; i < rec.x.size(); ++i) out += ',' + format_double(rec.x[i]);
            for (Eigen::Index i = 0; i < rec.y.size(); ++i) out += ',' + format_double(rec.y[i]);
            for (Eigen::Index i = 0; i < rec.psi.size(); ++i)
                out += ',' + format_double(rec.psi[i]);
            out += ',' + format_double(rec.xi_exact);
            out += ',' + format_double(rec.best_xi);
            out += ',' + std::to_string(rec.n_satisfied_best);
            out += ',' + std::to_string(rec.cum_max_n);
            out.push_back('\n');
        }
    }
    return out;
}

std::string summary_json(const CampaignResult& result, const AggregateCurves& curves) {
    json doc;
    doc["surface"] = result.config.surface;
    doc["starred"] = result.config.starred;
    doc["strategy"] = to_string(result.config.strategy);
    doc["budget"] = result.config.budget;
    doc["n_seed"] = result.config.n_seed;
    doc["repeats"] = result.config.repeats;
    doc["k"] = result.config.k;
    doc["mc_samples"] = result.config.mc_samples;
    doc["master_seed"] = result.config.master_seed;
    doc["mean_best_xi"] = curves.mean_best_xi;
    doc["se_best_xi"] = curves.se_best_xi;
    doc["satisfaction_probability"] = curves.satisfaction_probability;
    json quantiles = json::array();
    for (const auto& q : curves.first_hit_quantiles) {
        quantiles.push_back({{"p25", q[0]}, {"p50", q[1]}, {"p75", q[2]}});
    }
    doc["first_hit_quantiles"] = quantiles;
    doc["first_hit_censored"] = curves.censored_counts;
    doc["fallback_iterations"] = curves.total_fallbacks;
    return doc.dump(2) + "\n";
}

std::string convergence_svg(const AggregateCurves& curves, const std::string& title) {
    const int width = 640, height = 400;
    const int ml = 70, mr = 20, mt = 40, mb = 50;
    const double plot_w = width - ml - mr;
    const double plot_h = height - mt - mb;
    const std::size_t n = curves.mean_best_xi.size();

    double lo = curves.mean_best_xi[0], hi = curves.mean_best_xi[0];
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min(lo, curves.mean_best_xi[i] - curves.se_best_xi[i]);
        hi = std::max(hi, curves.mean_best_xi[i] + curves.se_best_xi[i]);
    }
    if (hi <= lo) hi = lo + 1.0;
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;

    auto px = [&](std::size_t i) {
        return ml + plot_w * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n - 1, 1));
    };
    auto py = [&](double v) { return mt + plot_h * (1.0 - (v - lo) / (hi - lo)); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" "
        << "font-family=\"sans-serif\">" << title << "</text>\n";
    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
        << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << ml + plot_w / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
        << "experiments</text>\n";
    svg << "<text x=\"16\" y=\"" << mt + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" "
        << "transform=\"rotate(-90 16 " << mt + plot_h / 2 << ")\">best score</text>\n";
    svg << "<text x=\"" << ml - 6 << "\" y=\"" << py(lo + pad) + 4
        << "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">"
        << format_double(lo + pad) << "</text>\n";
    svg << "<text x=\"" << ml - 6 << "\" y=\"" << py(hi - pad) + 4
        << "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">"
        << format_double(hi - pad) << "</text>\n";
    // SE band
    svg << "<polygon fill=\"#a6cee3\" fill-opacity=\"0.5\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
        svg << px(i) << ',' << py(curves.mean_best_xi[i] + curves.se_best_xi[i]) << ' ';
    }
    for (std::size_t i = n; i-- > 0;) {
        svg << px(i) << ',' << py(curves.mean_best_xi[i] - curves.se_best_xi[i]) << ' ';
    }
    svg << "\"/>\n";
    // mean curve
    svg << "<polyline fill=\"none\" stroke=\"#1f78b4\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
        svg << px(i) << ',' << py(curves.mean_best_xi[i]) << ' ';
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

std::string manifest_json(const std::string& config_hash, std::uint64_t master_seed,
                          const std::vector<ManifestEntry>& files,
                          const std::vector<std::string>& warnings) {
    json doc;
    doc["tool"] = "tierbo";
    doc["version"] = kVersion;
    doc["config_sha256"] = config_hash;
    doc["master_seed"] = master_seed;
    const auto now = std::chrono::system_clock::now();
    doc["written_unix_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
    json entries = json::array();
    for (const auto& entry : files) {
        entries.push_back(
            {{"path", entry.path}, {"sha256", entry.sha256}, {"bytes", entry.bytes}});
    }
    doc["files"] = entries;
    doc["warnings"] = warnings;
    return doc.dump(2) + "\n";
}

}  // namespace tierbo
