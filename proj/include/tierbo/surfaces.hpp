// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <vector>

#include "tierbo/objectives.hpp"

namespace tierbo {

/// Analytical multi-objective test problem.  Outputs are negated relative to
/// the usual minimization forms, so every raw output is maximized and the
/// reference thresholds read directly as "y_m > t".
struct SurfaceDef {
    std::string name;
    int input_dim = 0;
    int output_dim = 0;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> evaluate_one;
};

/// Registered surface by name (BNH, DH4, DTLZ5, ZDT1).  Throws NotFoundError
/// for unknown names.
const SurfaceDef& surface(const std::string& name);

/// Names in registry order.
std::vector<std::string> surface_names();

/// Evaluates a batch of input points (rows of X).  Each point must lie within
/// bounds (a small tolerance absorbs round-off from affine rescaling).
Eigen::MatrixXd evaluate(const std::string& name, const Eigen::MatrixXd& X);

/// Reference hierarchy per surface.  The starred variants insert the
/// input-derived objective at rank 2 and demote y_1 to rank 3 (BNH* also
/// relaxes the y_1 threshold to -15).
Hierarchy default_hierarchy(const std::string& name, bool starred);

}  // namespace tierbo
