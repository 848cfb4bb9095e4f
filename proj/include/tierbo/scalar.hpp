// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <vector>

namespace tierbo {

/// Controls how the tiered score is evaluated.  With `exact = true` the hard
/// step (H(0) = 1) and hard min are used; otherwise their smooth analogs with
/// sharpness `k`.
struct ScoreParams {
    double k = 100.0;
    bool exact = false;
};

/// Logistic approximation of the Heaviside step, 1 / (1 + exp(-k x)).
/// Branches on the sign of x so exp never overflows.  Throws
/// std::invalid_argument for non-finite x or k <= 0.
double smooth_heaviside(double x, double k);

/// Exponentially weighted soft minimum,
///   (a e^{-ka} + b e^{-kb}) / (e^{-ka} + e^{-kb}),
/// evaluated with the smaller argument subtracted from both exponents so the
/// weights stay in [0, 1].  Converges to min(a, b) as k -> inf; the error is
/// bounded by ln(2)/k.
double smooth_min(double a, double b, double k);

/// Partial derivatives of smooth_min with respect to (a, b).
Eigen::Vector2d smooth_min_grad(double a, double b, double k);

/// Tiered score over maximization-convention objective values: each tier
/// contributes min(psi_i, t_i) gated by the product of steps H(psi_j - t_j)
/// of all higher-priority tiers.  Exact mode uses the hard step with
/// H(0) = 1, so a tier sitting exactly at its threshold counts as satisfied;
/// the smooth step instead gives 0.5 at the threshold, which only matters on
/// that measure-zero set.
double botier_score(const Eigen::VectorXd& psi, const Eigen::VectorXd& t,
                    const ScoreParams& params);

/// Gradient of the smooth-mode score with respect to psi.  Matches central
/// finite differences away from exponent-saturation regimes.
Eigen::VectorXd botier_grad_psi(const Eigen::VectorXd& psi, const Eigen::VectorXd& t,
                                double k);

/// Additive hierarchical score of the earlier Chimera formulation, computed
/// for every row of `dataset_psi` at once.  The shift applied to tier i is
/// the sum of per-objective maxima of all higher tiers taken over the whole
/// supplied dataset, so appending a point may change every value; callers
/// that need stable per-point records must re-score the full dataset.
/// Hard steps with H(0) = 1 throughout.
std::vector<double> chimera_score(const std::vector<Eigen::VectorXd>& dataset_psi,
                                  const Eigen::VectorXd& t);

/// Threshold-penalty baseline: psi_1 minus the weighted sum of threshold
/// violations max(t_i - psi_i, 0).  Non-hierarchical.
double penalty_score(const Eigen::VectorXd& psi, const Eigen::VectorXd& t,
                     const Eigen::VectorXd& weights);

/// penalty_score with unit weights.
double penalty_score(const Eigen::VectorXd& psi, const Eigen::VectorXd& t);

}  // namespace tierbo
