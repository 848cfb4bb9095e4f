// SPDX-License-Identifier: Apache-2.0

#include "tierbo/objectives.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace tierbo {

ObjectiveSource ObjectiveSource::output(int index) {
    ObjectiveSource s;
    s.kind = Kind::Output;
    s.output_index = index;
    return s;
}

ObjectiveSource ObjectiveSource::input_affine(std::vector<std::pair<int, double>> coeffs,
                                              double constant) {
    ObjectiveSource s;
    s.kind = Kind::InputAffine;
    s.coeffs = std::move(coeffs);
    s.constant = constant;
    return s;
}

void Hierarchy::validate(int input_dim, int output_dim) const {
    if (objectives.empty()) {
        throw std::invalid_argument("hierarchy must contain at least one objective");
    }
    std::set<std::string> names;
    for (const auto& spec : objectives) {
        if (!names.insert(spec.name).second) {
            throw std::invalid_argument("duplicate objective name: " + spec.name);
        }
        if (!std::isfinite(spec.threshold)) {
            throw std::invalid_argument("objective " + spec.name + ": threshold must be finite");
        }
        if (spec.norm_bounds && !(spec.norm_bounds->first < spec.norm_bounds->second)) {
            throw std::invalid_argument("objective " + spec.name + ": norm bounds need lo < hi");
        }
        if (spec.source.kind == ObjectiveSource::Kind::Output) {
            if (spec.source.output_index < 0 || spec.source.output_index >= output_dim) {
                throw std::invalid_argument("objective " + spec.name + ": output index out of range");
            }
        } else {
            for (const auto& [idx, coeff] : spec.source.coeffs) {
                (void)coeff;
                if (idx < 0 || idx >= input_dim) {
                    throw std::invalid_argument("objective " + spec.name +
                                                ": input coordinate out of range");
                }
            }
        }
    }
}

double raw_objective_value(const ObjectiveSpec& spec, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y) {
    if (spec.source.kind == ObjectiveSource::Kind::Output) {
        if (spec.source.output_index < 0 || spec.source.output_index >= y.size()) {
            throw std::invalid_argument("objective " + spec.name + ": output index out of range");
        }
        return y[spec.source.output_index];
    }
    double value = spec.source.constant;
    for (const auto& [idx, coeff] : spec.source.coeffs) {
        if (idx < 0 || idx >= x.size()) {
            throw std::invalid_argument("objective " + spec.name + ": input coordinate out of range");
        }
        value += coeff * x[idx];
    }
    return value;
}

namespace {

// Flip minimize tiers, then normalize.  norm_bounds are given on the raw
// direction, so they flip along with the value.
std::pair<double, double> to_max_convention(const ObjectiveSpec& spec, double value) {
    double v = value;
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
        const double range = hi - lo;
        v = (v - lo) / range;
        t = (t - lo) / range;
    }
    return {v, t};
}

}  // namespace

DerivedObjectives derive_psi(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                             const Hierarchy& hierarchy) {
    const int n = hierarchy.size();
    DerivedObjectives out;
    out.psi.resize(n);
    out.thresholds.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto& spec = hierarchy.objectives[i];
        const auto [v, t] = to_max_convention(spec, raw_objective_value(spec, x, y));
        out.psi[i] = v;
        out.thresholds[i] = t;
    }
    return out;
}

Eigen::VectorXd derived_thresholds(const Hierarchy& hierarchy) {
    const int n = hierarchy.size();
    Eigen::VectorXd t(n);
    for (int i = 0; i < n; ++i) {
        const auto& spec = hierarchy.objectives[i];
        t[i] = to_max_convention(spec, 0.0).second;
    }
    return t;
}

int count_satisfied(const Eigen::VectorXd& psi, const Eigen::VectorXd& t) {
    if (psi.size() != t.size()) {
        throw std::invalid_argument("count_satisfied: length mismatch");
    }
    int n = 0;
    while (n < psi.size() && psi[n] >= t[n]) {
        ++n;
    }
    return n;
}

Observation make_observation(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                             const Hierarchy& hierarchy) {
    auto derived = derive_psi(x, y, hierarchy);
    Observation obs;
    obs.x = x;
    obs.y = y;
    obs.psi = std::move(derived.psi);
    obs.n_satisfied = count_satisfied(obs.psi, derived.thresholds);
    return obs;
}

}  // namespace tierbo
