// SPDX-License-Identifier: Apache-2.0

#include "tierbo/gp.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "tierbo/errors.hpp"
#include "tierbo/optimize.hpp"
#include "tierbo/sobol.hpp"

namespace tierbo {

namespace {

constexpr double kNoiseFloor = 1e-6;
constexpr double kSqrt5 = 2.2360679774997896964;

// Matern-5/2 ARD kernel matrix for standardized inputs.  When `A == B` the
// result is symmetric with sv on the diagonal.
Eigen::MatrixXd matern52(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                         const Eigen::VectorXd& lengthscales, double signal_variance) {
    Eigen::MatrixXd K(A.rows(), B.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        for (Eigen::Index j = 0; j < B.rows(); ++j) {
            double r2 = 0.0;
            for (Eigen::Index d = 0; d < A.cols(); ++d) {
                const double diff = (A(i, d) - B(j, d)) / lengthscales[d];
                r2 += diff * diff;
            }
            const double r = std::sqrt(r2);
            K(i, j) = signal_variance * (1.0 + kSqrt5 * r + 5.0 / 3.0 * r2) *
                      std::exp(-kSqrt5 * r);
        }
    }
    return K;
}

struct LmlState {
    bool ok = false;
    double lml = -std::numeric_limits<double>::infinity();
    Eigen::LLT<Eigen::MatrixXd> llt;
    Eigen::VectorXd alpha;
    double mean = 0.0;
};

LmlState lml_core(const Eigen::MatrixXd& Z, const Eigen::VectorXd& ys,
                  const Eigen::VectorXd& ell, double sv, double nv) {
    LmlState state;
    const Eigen::Index n = Z.rows();
    Eigen::MatrixXd A = matern52(Z, Z, ell, sv);
    A.diagonal().array() += nv;
    state.llt.compute(A);
    if (state.llt.info() != Eigen::Success) {
        return state;
    }
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    const Eigen::VectorXd Ainv_y = state.llt.solve(ys);
    const Eigen::VectorXd Ainv_1 = state.llt.solve(ones);
    const double denom = ones.dot(Ainv_1);
    state.mean = denom > 0.0 ? ones.dot(Ainv_y) / denom : 0.0;
    const Eigen::VectorXd r = ys.array() - state.mean;
    state.alpha = state.llt.solve(r);
    const double logdet = state.llt.matrixLLT().diagonal().array().log().sum();
    state.lml = -0.5 * r.dot(state.alpha) - logdet -
                0.5 * static_cast<double>(n) * std::log(2.0 * std::numbers::pi);
    state.ok = std::isfinite(state.lml);
    return state;
}

}  // namespace

double gp_log_marginal_likelihood(const Eigen::MatrixXd& Z, const Eigen::VectorXd& ys,
                                  const GPHyperparams& params, Eigen::VectorXd* grad) {
    const Eigen::Index n = Z.rows();
    const Eigen::Index d = Z.cols();
    const auto state = lml_core(Z, ys, params.lengthscales, params.signal_variance,
                                params.noise_variance);
    if (!state.ok) {
        return -std::numeric_limits<double>::infinity();
    }
    if (grad != nullptr) {
        // d(lml)/d theta = 0.5 alpha' dA alpha - 0.5 tr(A^{-1} dA), with the
        // profiled mean contributing nothing at its optimum.
        grad->resize(d + 2);
        const Eigen::MatrixXd Ainv =
            state.llt.solve(Eigen::MatrixXd::Identity(n, n));
        const Eigen::MatrixXd K = matern52(Z, Z, params.lengthscales, params.signal_variance);

        // Shared factor for lengthscale derivatives:
        // dK/dlog(l_i) = (5/3) sv (1 + sqrt5 r) exp(-sqrt5 r) * d_i^2 / l_i^2.
        Eigen::MatrixXd base(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                double r2 = 0.0;
                for (Eigen::Index c = 0; c < d; ++c) {
                    const double diff = (Z(i, c) - Z(j, c)) / params.lengthscales[c];
                    r2 += diff * diff;
                }
                const double r = std::sqrt(r2);
                base(i, j) = 5.0 / 3.0 * params.signal_variance * (1.0 + kSqrt5 * r) *
                             std::exp(-kSqrt5 * r);
            }
        }
        for (Eigen::Index c = 0; c < d; ++c) {
            Eigen::MatrixXd dK(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index j = 0; j < n; ++j) {
                    const double diff = Z(i, c) - Z(j, c);
                    dK(i, j) = base(i, j) * diff * diff /
                               (params.lengthscales[c] * params.lengthscales[c]);
                }
            }
            (*grad)[c] = 0.5 * state.alpha.dot(dK * state.alpha) -
                         0.5 * (Ainv.cwiseProduct(dK)).sum();
        }
        (*grad)[d] = 0.5 * state.alpha.dot(K * state.alpha) -
                     0.5 * (Ainv.cwiseProduct(K)).sum();
        (*grad)[d + 1] = 0.5 * params.noise_variance *
                         (state.alpha.squaredNorm() - Ainv.trace());
    }
    return state.lml;
}

Eigen::MatrixXd FittedSurrogate::standardize_inputs(const Eigen::MatrixXd& X) const {
    Eigen::MatrixXd Z = X;
    for (Eigen::Index c = 0; c < Z.cols(); ++c) {
        Z.col(c) = (Z.col(c).array() - input_lo_[c]) / (input_hi_[c] - input_lo_[c]);
    }
    return Z;
}

FittedSurrogate fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                    const Eigen::VectorXd& input_lo, const Eigen::VectorXd& input_hi,
                    const FitOptions& options) {
    const Eigen::Index n = X.rows();
    const Eigen::Index d = X.cols();
    if (n < 1) {
        throw std::invalid_argument("gp fit: need at least one observation");
    }
    if (y.size() != n || input_lo.size() != d || input_hi.size() != d) {
        throw std::invalid_argument("gp fit: shape mismatch");
    }
    if (!X.allFinite() || !y.allFinite()) {
        throw std::invalid_argument("gp fit: non-finite training data");
    }

    FittedSurrogate model;
    model.input_lo_ = input_lo;
    model.input_hi_ = input_hi;
    model.Z_ = model.standardize_inputs(X);
    model.target_mean_ = y.mean();
    const double var = (y.array() - model.target_mean_).square().sum() /
                       std::max<double>(1.0, static_cast<double>(n));
    model.target_scale_ = var > 1e-24 ? std::sqrt(var) : 1.0;
    const Eigen::VectorXd ys = (y.array() - model.target_mean_) / model.target_scale_;

    const bool learn_noise = !options.fixed_noise.has_value();
    const Eigen::Index n_params = d + 1 + (learn_noise ? 1 : 0);

    // Optimization box in log space.
    Eigen::VectorXd lo(n_params), hi(n_params);
    for (Eigen::Index i = 0; i < d; ++i) {
        lo[i] = std::log(1e-3);
        hi[i] = std::log(1e3);
    }
    lo[d] = std::log(1e-6);
    hi[d] = std::log(1e3);
    if (learn_noise) {
        lo[d + 1] = std::log(kNoiseFloor);
        hi[d + 1] = std::log(1.0);
    }

    const double fixed_nv =
        options.fixed_noise ? std::max(*options.fixed_noise, kNoiseFloor) : kNoiseFloor;

    auto unpack = [&](const Eigen::VectorXd& theta) {
        GPHyperparams p;
        p.lengthscales = theta.head(d).array().exp();
        p.signal_variance = std::exp(theta[d]);
        p.noise_variance = learn_noise ? std::exp(theta[d + 1]) : fixed_nv;
        return p;
    };

    BoxObjective objective = [&](const Eigen::VectorXd& theta, Eigen::VectorXd* grad) {
        const GPHyperparams p = unpack(theta);
        Eigen::VectorXd full_grad;
        const double lml =
            gp_log_marginal_likelihood(model.Z_, ys, p, grad ? &full_grad : nullptr);
        if (!std::isfinite(lml)) {
            if (grad) grad->setZero(n_params);
            return 1e30;
        }
        if (grad) {
            grad->resize(n_params);
            grad->head(d + 1) = -full_grad.head(d + 1);
            if (learn_noise) (*grad)[d + 1] = -full_grad[d + 1];
        }
        return -lml;
    };

    // Restart grid, Sobol-spaced in a moderate sub-box of the log bounds.
    Eigen::VectorXd init_lo(n_params), init_hi(n_params);
    for (Eigen::Index i = 0; i < d; ++i) {
        init_lo[i] = std::log(0.05);
        init_hi[i] = std::log(2.0);
    }
    init_lo[d] = std::log(0.2);
    init_hi[d] = std::log(2.0);
    if (learn_noise) {
        init_lo[d + 1] = std::log(1e-5);
        init_hi[d + 1] = std::log(0.1);
    }
    SobolStream stream(static_cast<int>(n_params), options.seed);
    const Eigen::MatrixXd raw = stream.draw(std::max(1, options.restarts));
    const Eigen::MatrixXd inits = scale_to_bounds(raw, init_lo, init_hi);

    BoxMinimizeOptions opt_options;
    opt_options.max_iter = options.max_iter;
    double best_value = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_theta;
    for (Eigen::Index r = 0; r < inits.rows(); ++r) {
        const auto res = minimize_box(objective, inits.row(r).transpose(), lo, hi, opt_options);
        if (res.value < best_value) {
            best_value = res.value;
            best_theta = res.x;
        }
    }
    if (!std::isfinite(best_value) || best_theta.size() == 0) {
        throw NumericalError("gp fit: no restart produced a finite likelihood");
    }

    model.hyperparams_ = unpack(best_theta);
    model.hyperparams_.noise_variance = std::max(model.hyperparams_.noise_variance, kNoiseFloor);

    // Final factorization with escalating jitter.
    const double sv = model.hyperparams_.signal_variance;
    Eigen::MatrixXd K = matern52(model.Z_, model.Z_, model.hyperparams_.lengthscales, sv);
    double jitter = 0.0;
    LmlState final_state;
    for (double scale : {0.0, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4}) {
        jitter = scale * sv;
        Eigen::MatrixXd A = K;
        A.diagonal().array() += model.hyperparams_.noise_variance + jitter;
        final_state.llt.compute(A);
        if (final_state.llt.info() == Eigen::Success) {
            final_state.ok = true;
            break;
        }
    }
    if (!final_state.ok) {
        throw NumericalError("gp fit: Cholesky failed after jitter escalation (n=" +
                             std::to_string(n) + ", sv=" + std::to_string(sv) + ", nv=" +
                             std::to_string(model.hyperparams_.noise_variance) + ")");
    }
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    const Eigen::VectorXd Ainv_y = final_state.llt.solve(ys);
    const Eigen::VectorXd Ainv_1 = final_state.llt.solve(ones);
    model.hyperparams_.mean_constant = ones.dot(Ainv_y) / ones.dot(Ainv_1);
    const Eigen::VectorXd resid = ys.array() - model.hyperparams_.mean_constant;
    model.alpha_ = final_state.llt.solve(resid);
    model.chol_ = final_state.llt.matrixL();
    model.jitter_ = jitter;
    model.lml_ = -best_value;
    return model;
}

Posterior FittedSurrogate::posterior(const Eigen::MatrixXd& Xq, bool include_noise) const {
    if (!Xq.allFinite()) {
        throw std::invalid_argument("gp posterior: non-finite query");
    }
    const Eigen::MatrixXd Zq = standardize_inputs(Xq);
    const Eigen::MatrixXd Ks =
        matern52(Z_, Zq, hyperparams_.lengthscales, hyperparams_.signal_variance);
    Posterior post;
    post.mean = hyperparams_.mean_constant + (Ks.transpose() * alpha_).array();
    const Eigen::MatrixXd V = chol_.triangularView<Eigen::Lower>().solve(Ks);
    post.variance.resize(Zq.rows());
    for (Eigen::Index i = 0; i < Zq.rows(); ++i) {
        double var = hyperparams_.signal_variance - V.col(i).squaredNorm();
        if (include_noise) var += hyperparams_.noise_variance;
        post.variance[i] = std::max(var, 0.0);
    }
    // De-standardize.
    post.mean = target_mean_ + target_scale_ * post.mean.array();
    post.variance *= target_scale_ * target_scale_;
    return post;
}

Eigen::MatrixXd FittedSurrogate::posterior_covariance(const Eigen::MatrixXd& Xq) const {
    const Eigen::MatrixXd Zq = standardize_inputs(Xq);
    const Eigen::MatrixXd Ks =
        matern52(Z_, Zq, hyperparams_.lengthscales, hyperparams_.signal_variance);
    const Eigen::MatrixXd Kqq =
        matern52(Zq, Zq, hyperparams_.lengthscales, hyperparams_.signal_variance);
    const Eigen::MatrixXd V = chol_.triangularView<Eigen::Lower>().solve(Ks);
    Eigen::MatrixXd cov = Kqq - V.transpose() * V;
    cov = 0.5 * (cov + cov.transpose());
    return target_scale_ * target_scale_ * cov;
}

Eigen::MatrixXd FittedSurrogate::sample_posterior(const Eigen::MatrixXd& Xq,
                                                  const Eigen::MatrixXd& base_samples) const {
    if (base_samples.cols() != Xq.rows()) {
        throw std::invalid_argument("sample_posterior: base sample shape must be K x |Xq|");
    }
    const Posterior post = posterior(Xq, /*include_noise=*/false);
    Eigen::MatrixXd cov = posterior_covariance(Xq);
    Eigen::LLT<Eigen::MatrixXd> llt;
    const double scale = std::max(cov.diagonal().maxCoeff(), 1e-30);
    bool ok = false;
    for (double jitter_scale : {0.0, 1e-12, 1e-10, 1e-8, 1e-6}) {
        Eigen::MatrixXd C = cov;
        C.diagonal().array() += jitter_scale * scale;
        llt.compute(C);
        if (llt.info() == Eigen::Success) {
            ok = true;
            break;
        }
    }
    if (!ok) {
        throw NumericalError("sample_posterior: posterior covariance factorization failed");
    }
    const Eigen::MatrixXd L = llt.matrixL();
    Eigen::MatrixXd samples(base_samples.rows(), Xq.rows());
    for (Eigen::Index k = 0; k < base_samples.rows(); ++k) {
        samples.row(k) =
            (post.mean + L * base_samples.row(k).transpose()).transpose();
    }
    return samples;
}

}  // namespace tierbo
