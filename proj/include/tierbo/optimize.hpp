// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <functional>

namespace tierbo {

/// Objective callback: returns f(x) and, when `grad` is non-null, fills the
/// gradient.  Minimization convention.
using BoxObjective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd* grad)>;

struct BoxMinimizeOptions {
    int max_iter = 100;
    int memory = 6;
    double grad_tol = 1e-8;  // on the projected gradient, inf-norm
    double f_tol = 1e-12;    // relative objective change
};

struct BoxMinimizeResult {
    Eigen::VectorXd x;
    double value = 0.0;
    int iterations = 0;
    bool line_search_failed = false;
};

/// Projected L-BFGS with Armijo backtracking.  Iterates are clipped to the
/// box after each trial step; curvature pairs that lose positivity under the
/// projection are dropped.
BoxMinimizeResult minimize_box(const BoxObjective& objective, Eigen::VectorXd x0,
                               const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                               const BoxMinimizeOptions& options = {});

/// Wraps a value-only function with central finite differences so it can be
/// used as a BoxObjective.  `h` is the absolute step per coordinate.
BoxObjective with_fd_gradient(std::function<double(const Eigen::VectorXd&)> f, double h = 1e-6);

}  // namespace tierbo
