// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tierbo {

/// Where an objective's raw value comes from: one of the surface outputs, or
/// an affine combination of the input coordinates (coeffs . x + constant).
struct ObjectiveSource {
    enum class Kind { Output, InputAffine };

    Kind kind = Kind::Output;
    int output_index = 0;
    std::vector<std::pair<int, double>> coeffs;  // (coordinate index, weight)
    double constant = 0.0;

    static ObjectiveSource output(int index);
    static ObjectiveSource input_affine(std::vector<std::pair<int, double>> coeffs,
                                        double constant = 0.0);
};

enum class Direction { Maximize, Minimize };

/// One tier of the hierarchy.  `threshold` and `norm_bounds` are in raw units
/// on the raw direction; derivation flips minimize objectives and then
/// applies the optional [0, 1] normalization to value and threshold alike.
struct ObjectiveSpec {
    std::string name;
    ObjectiveSource source;
    Direction direction = Direction::Maximize;
    double threshold = 0.0;
    std::optional<std::pair<double, double>> norm_bounds;
};

/// Ordered objective list, rank 0 most important.  Names must be unique.
struct Hierarchy {
    std::vector<ObjectiveSpec> objectives;

    int size() const { return static_cast<int>(objectives.size()); }
    void validate(int input_dim, int output_dim) const;
};

/// Maximization-convention objective values and matching thresholds for one
/// evaluated point.
struct DerivedObjectives {
    Eigen::VectorXd psi;
    Eigen::VectorXd thresholds;
};

/// Evaluated point with derived objective values.  psi and n_satisfied are
/// pure functions of (x, y, hierarchy).
struct Observation {
    Eigen::VectorXd x;
    Eigen::VectorXd y;
    Eigen::VectorXd psi;
    int n_satisfied = 0;
};

/// Raw value of a single objective at (x, y), before direction flip or
/// normalization.
double raw_objective_value(const ObjectiveSpec& spec, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y);

/// Maps an evaluated point onto the hierarchy's (psi, t) pair: raw value per
/// source, minimize tiers negated (value and threshold), optional affine
/// normalization applied to both.
DerivedObjectives derive_psi(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                             const Hierarchy& hierarchy);

/// Threshold vector of the hierarchy in the derived (maximization, possibly
/// normalized) convention.
Eigen::VectorXd derived_thresholds(const Hierarchy& hierarchy);

/// Length of the longest prefix with psi_i >= t_i for all i.  A point
/// satisfying only tiers {1, 3} counts 1.
int count_satisfied(const Eigen::VectorXd& psi, const Eigen::VectorXd& t);

/// Convenience: evaluates a point against the hierarchy.
Observation make_observation(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                             const Hierarchy& hierarchy);

}  // namespace tierbo
