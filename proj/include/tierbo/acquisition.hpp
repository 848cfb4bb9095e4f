// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

#include "tierbo/gp.hpp"
#include "tierbo/objectives.hpp"
#include "tierbo/scalar.hpp"

namespace tierbo {

/// Composite score applied to per-sample objective vectors inside the MC
/// expected-improvement utility.
enum class CompositeScore { BoTier, Penalty };

/// Shared state for one acquisition optimization pass.  `base_samples`
/// (K x n_outputs) stays fixed for the whole pass so the acquisition is a
/// smooth, deterministic function of the candidate.
struct AcqContext {
    const std::vector<FittedSurrogate>* models = nullptr;
    const Hierarchy* hierarchy = nullptr;
    ScoreParams score_params;
    CompositeScore score = CompositeScore::BoTier;
    double incumbent = 0.0;  // best exact score over observed data
    Eigen::MatrixXd base_samples;
};

/// Monte-Carlo composite expected improvement at a single candidate (q=1):
/// posterior samples per output are assembled into objective vectors together
/// with the input-derived tiers, scored, and averaged as
/// mean_k max(score(psi_k) - incumbent, 0).
double mc_composite_ei(const AcqContext& ctx, const Eigen::VectorXd& x);

/// Closed-form expected improvement for a Gaussian belief.  Degenerates to
/// max(mean - incumbent, 0) below sigma = 1e-12.
double analytic_ei(double mean, double stddev, double incumbent);

/// Analytic EI of a single surrogate fitted directly on scalar scores.
Eigen::VectorXd analytic_ei(const FittedSurrogate& model, double incumbent,
                            const Eigen::MatrixXd& Xq);

/// Non-dominated subset (maximization convention), stable order.
Eigen::MatrixXd pareto_front(const Eigen::MatrixXd& points);

/// Dominated hypervolume above `ref` for 2 or 3 maximized objectives (exact
/// sweep over the non-dominated set).
double hypervolume(const Eigen::MatrixXd& points, const Eigen::VectorXd& ref);

/// Hypervolume gained by adding `candidate` to `points`.
double hypervolume_improvement(const Eigen::MatrixXd& points, const Eigen::VectorXd& candidate,
                               const Eigen::VectorXd& ref);

struct EhviContext {
    const std::vector<FittedSurrogate>* models = nullptr;
    const Hierarchy* hierarchy = nullptr;
    Eigen::MatrixXd pareto;  // observed non-dominated psi, rows
    Eigen::VectorXd ref;
    Eigen::MatrixXd base_samples;  // K x n_outputs
};

/// MC expected hypervolume improvement at a single candidate; input-derived
/// objectives enter each sample as deterministic coordinates.  Throws
/// std::invalid_argument when the reference point is missing.
double ehvi(const EhviContext& ctx, const Eigen::VectorXd& x);

struct OptimizeAcqfOptions {
    int raw_samples = 256;
    int starts = 8;
    int max_iter = 60;
    double fd_step = 1e-6;
    std::uint64_t seed = 0;
};

struct OptimizeAcqfResult {
    Eigen::VectorXd x;
    double value = 0.0;
    bool fallback_raw = false;  // every local ascent failed; best raw candidate returned
};

/// Multi-start maximization over a box: Sobol raw candidates, top-`starts`
/// refined by projected quasi-Newton ascent with finite-difference gradients.
/// Deterministic given the stream seed.
OptimizeAcqfResult optimize_acqf(const std::function<double(const Eigen::VectorXd&)>& acq,
                                 const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                 const OptimizeAcqfOptions& options = {});

}  // namespace tierbo
