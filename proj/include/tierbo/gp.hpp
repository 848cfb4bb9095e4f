// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>

namespace tierbo {

struct GPHyperparams {
    Eigen::VectorXd lengthscales;  // per input dim, on the unit-cube scale
    double signal_variance = 1.0;
    double noise_variance = 1e-6;  // standardized-target scale, floored at 1e-6
    double mean_constant = 0.0;    // standardized-target scale
};

struct FitOptions {
    int restarts = 8;
    int max_iter = 50;
    std::uint64_t seed = 0;
    std::optional<double> fixed_noise;  // standardized scale; skips noise learning
};

struct Posterior {
    Eigen::VectorXd mean;
    Eigen::VectorXd variance;
};

/// Single-output GP with a Matern-5/2 ARD kernel and constant mean.  Inputs
/// are min-max scaled to the unit cube with the problem bounds; targets are
/// standardized per fit.  Immutable once fitted.
class FittedSurrogate {
public:
    const GPHyperparams& hyperparams() const { return hyperparams_; }
    double log_marginal_likelihood() const { return lml_; }
    Eigen::Index train_size() const { return Z_.rows(); }

    /// Predictive mean and marginal variance at query points (rows of Xq,
    /// problem units).  Variances are clamped at zero; `include_noise` adds
    /// the learned observation noise.
    Posterior posterior(const Eigen::MatrixXd& Xq, bool include_noise) const;

    /// Latent posterior covariance at the query points, de-standardized.
    Eigen::MatrixXd posterior_covariance(const Eigen::MatrixXd& Xq) const;

    /// Pathwise samples: mean + L * base per row of `base_samples`
    /// (shape K x |Xq|), L a factor of the latent posterior covariance.
    /// Reusing base samples makes the output a smooth function of Xq.
    Eigen::MatrixXd sample_posterior(const Eigen::MatrixXd& Xq,
                                     const Eigen::MatrixXd& base_samples) const;

private:
    friend FittedSurrogate fit(const Eigen::MatrixXd&, const Eigen::VectorXd&,
                               const Eigen::VectorXd&, const Eigen::VectorXd&,
                               const FitOptions&);

    GPHyperparams hyperparams_;
    double lml_ = 0.0;
    Eigen::VectorXd input_lo_, input_hi_;
    double target_mean_ = 0.0;
    double target_scale_ = 1.0;
    Eigen::MatrixXd Z_;       // standardized training inputs
    Eigen::MatrixXd chol_;    // lower factor of K + (nv + jitter) I
    Eigen::VectorXd alpha_;   // (K + nv I)^{-1} residual
    double jitter_ = 0.0;

    Eigen::MatrixXd standardize_inputs(const Eigen::MatrixXd& X) const;
};

/// Fits hyperparameters by multi-start quasi-Newton maximization of the log
/// marginal likelihood (restarts Sobol-spaced in log-hyperparameter space).
/// The constant mean is profiled out analytically.  Throws NumericalError if
/// the final factorization fails after escalating jitter.
FittedSurrogate fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                    const Eigen::VectorXd& input_lo, const Eigen::VectorXd& input_hi,
                    const FitOptions& options = {});

/// Log marginal likelihood (and optionally its gradient w.r.t.
/// [log lengthscales..., log signal variance, log noise variance]) for given
/// hyperparameters on standardized data.  Exposed for gradient tests.
double gp_log_marginal_likelihood(const Eigen::MatrixXd& Z, const Eigen::VectorXd& ys,
                                  const GPHyperparams& params, Eigen::VectorXd* grad);

}  // namespace tierbo
