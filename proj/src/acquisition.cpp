// SPDX-License-Identifier: Apache-2.0

#include "tierbo/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "tierbo/optimize.hpp"
#include "tierbo/sobol.hpp"
#include "tierbo/stats.hpp"

namespace tierbo {

namespace {

// Posterior means/stddevs of every output model at one point.
void per_output_moments(const std::vector<FittedSurrogate>& models, const Eigen::VectorXd& x,
                        Eigen::VectorXd& means, Eigen::VectorXd& stddevs) {
    const Eigen::Index m = static_cast<Eigen::Index>(models.size());
    means.resize(m);
    stddevs.resize(m);
    Eigen::MatrixXd xq = x.transpose();
    for (Eigen::Index j = 0; j < m; ++j) {
        const Posterior post = models[j].posterior(xq, /*include_noise=*/false);
        means[j] = post.mean[0];
        stddevs[j] = std::sqrt(post.variance[0]);
    }
}

bool dominates(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    bool strict = false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        if (a[i] > b[i]) strict = true;
    }
    return strict;
}

double hv2d(std::vector<Eigen::Vector2d> pts, double rx, double ry) {
    // Keep points above the reference, sort by x descending; the union of
    // boxes becomes a staircase of disjoint strips.
    std::erase_if(pts, [&](const auto& p) { return p[0] <= rx || p[1] <= ry; });
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] > b[0];
        return a[1] > b[1];
    });
    double hv = 0.0;
    double y_cover = ry;
    for (const auto& p : pts) {
        if (p[1] > y_cover) {
            hv += (p[0] - rx) * (p[1] - y_cover);
            y_cover = p[1];
        }
    }
    return hv;
}

double hv3d(const Eigen::MatrixXd& points, const Eigen::VectorXd& ref) {
    std::vector<Eigen::Index> order(points.rows());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return points(a, 2) > points(b, 2);
    });
    // Sweep z from above: each slab contributes the 2D area of the points
    // already seen times the slab height.
    double hv = 0.0;
    std::vector<Eigen::Vector2d> seen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Eigen::Index idx = order[i];
        if (points(idx, 2) <= ref[2]) break;
        seen.emplace_back(points(idx, 0), points(idx, 1));
        const double z_top = points(idx, 2);
        const double z_bottom =
            (i + 1 < order.size()) ? std::max(points(order[i + 1], 2), ref[2]) : ref[2];
        if (z_top > z_bottom) {
            hv += hv2d(seen, ref[0], ref[1]) * (z_top - z_bottom);
        }
    }
    return hv;
}

}  // namespace

double analytic_ei(double mean, double stddev, double incumbent) {
    if (stddev < 1e-12) {
        return std::max(mean - incumbent, 0.0);
    }
    const double z = (mean - incumbent) / stddev;
    return stddev * (z * normal_cdf(z) + normal_pdf(z));
}

Eigen::VectorXd analytic_ei(const FittedSurrogate& model, double incumbent,
                            const Eigen::MatrixXd& Xq) {
    const Posterior post = model.posterior(Xq, /*include_noise=*/false);
    Eigen::VectorXd values(Xq.rows());
    for (Eigen::Index i = 0; i < Xq.rows(); ++i) {
        values[i] = analytic_ei(post.mean[i], std::sqrt(post.variance[i]), incumbent);
    }
    return values;
}

double mc_composite_ei(const AcqContext& ctx, const Eigen::VectorXd& x) {
    if (ctx.models == nullptr || ctx.hierarchy == nullptr) {
        throw std::invalid_argument("mc_composite_ei: context is missing models or hierarchy");
    }
    const Eigen::Index n_out = static_cast<Eigen::Index>(ctx.models->size());
    if (ctx.base_samples.cols() != n_out) {
        throw std::invalid_argument("mc_composite_ei: base samples must be K x n_outputs");
    }
    Eigen::VectorXd means, stddevs;
    per_output_moments(*ctx.models, x, means, stddevs);

    const Eigen::Index K = ctx.base_samples.rows();
    Eigen::VectorXd y_sample(n_out);
    double total = 0.0;
    for (Eigen::Index k = 0; k < K; ++k) {
        for (Eigen::Index j = 0; j < n_out; ++j) {
            y_sample[j] = means[j] + stddevs[j] * ctx.base_samples(k, j);
        }
        const DerivedObjectives derived = derive_psi(x, y_sample, *ctx.hierarchy);
        double score = 0.0;
        switch (ctx.score) {
            case CompositeScore::BoTier:
                score = botier_score(derived.psi, derived.thresholds, ctx.score_params);
                break;
            case CompositeScore::Penalty:
                score = penalty_score(derived.psi, derived.thresholds);
                break;
        }
        total += std::max(score - ctx.incumbent, 0.0);
    }
    return total / static_cast<double>(K);
}

Eigen::MatrixXd pareto_front(const Eigen::MatrixXd& points) {
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        bool dominated = false;
        for (Eigen::Index j = 0; j < points.rows() && !dominated; ++j) {
            if (j != i && dominates(points.row(j).transpose(), points.row(i).transpose())) {
                dominated = true;
            }
        }
        if (!dominated) keep.push_back(i);
    }
    Eigen::MatrixXd front(static_cast<Eigen::Index>(keep.size()), points.cols());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        front.row(static_cast<Eigen::Index>(k)) = points.row(keep[k]);
    }
    return front;
}

double hypervolume(const Eigen::MatrixXd& points, const Eigen::VectorXd& ref) {
    if (ref.size() != points.cols()) {
        throw std::invalid_argument("hypervolume: reference point dimension mismatch");
    }
    if (points.rows() == 0) return 0.0;
    if (points.cols() == 2) {
        std::vector<Eigen::Vector2d> pts;
        pts.reserve(points.rows());
        for (Eigen::Index i = 0; i < points.rows(); ++i) {
            pts.emplace_back(points(i, 0), points(i, 1));
        }
        return hv2d(std::move(pts), ref[0], ref[1]);
    }
    if (points.cols() == 3) {
        return hv3d(points, ref);
    }
    throw std::invalid_argument("hypervolume: only 2 or 3 objectives supported");
}

double hypervolume_improvement(const Eigen::MatrixXd& points, const Eigen::VectorXd& candidate,
                               const Eigen::VectorXd& ref) {
    Eigen::MatrixXd extended(points.rows() + 1, points.cols());
    extended.topRows(points.rows()) = points;
    extended.row(points.rows()) = candidate.transpose();
    return hypervolume(extended, ref) - hypervolume(points, ref);
}

double ehvi(const EhviContext& ctx, const Eigen::VectorXd& x) {
    if (ctx.models == nullptr || ctx.hierarchy == nullptr) {
        throw std::invalid_argument("ehvi: context is missing models or hierarchy");
    }
    if (ctx.ref.size() == 0) {
        throw std::invalid_argument("ehvi: reference point not set");
    }
    const Eigen::Index n_out = static_cast<Eigen::Index>(ctx.models->size());
    if (ctx.base_samples.cols() != n_out) {
        throw std::invalid_argument("ehvi: base samples must be K x n_outputs");
    }
    Eigen::VectorXd means, stddevs;
    per_output_moments(*ctx.models, x, means, stddevs);

    const double hv_base = hypervolume(ctx.pareto, ctx.ref);
    const Eigen::Index K = ctx.base_samples.rows();
    Eigen::VectorXd y_sample(n_out);
    Eigen::MatrixXd extended(ctx.pareto.rows() + 1, ctx.pareto.cols());
    extended.topRows(ctx.pareto.rows()) = ctx.pareto;
    double total = 0.0;
    for (Eigen::Index k = 0; k < K; ++k) {
        for (Eigen::Index j = 0; j < n_out; ++j) {
            y_sample[j] = means[j] + stddevs[j] * ctx.base_samples(k, j);
        }
        const DerivedObjectives derived = derive_psi(x, y_sample, *ctx.hierarchy);
        extended.row(ctx.pareto.rows()) = derived.psi.transpose();
        total += std::max(hypervolume(extended, ctx.ref) - hv_base, 0.0);
    }
    return total / static_cast<double>(K);
}

OptimizeAcqfResult optimize_acqf(const std::function<double(const Eigen::VectorXd&)>& acq,
                                 const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                                 const OptimizeAcqfOptions& options) {
    const int dim = static_cast<int>(lo.size());
    SobolStream stream(dim, options.seed);
    const Eigen::MatrixXd raw = scale_to_bounds(stream.draw(options.raw_samples), lo, hi);

    std::vector<std::pair<double, Eigen::Index>> scored(raw.rows());
    for (Eigen::Index i = 0; i < raw.rows(); ++i) {
        scored[i] = {acq(raw.row(i).transpose()), i};
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    OptimizeAcqfResult best;
    best.x = raw.row(scored.front().second).transpose();
    best.value = scored.front().first;

    BoxMinimizeOptions local;
    local.max_iter = options.max_iter;
    const BoxObjective neg =
        with_fd_gradient([&acq](const Eigen::VectorXd& x) { return -acq(x); }, options.fd_step);

    bool any_success = false;
    const int starts = std::min<int>(options.starts, static_cast<int>(scored.size()));
    for (int s = 0; s < starts; ++s) {
        const Eigen::VectorXd x0 = raw.row(scored[s].second).transpose();
        const BoxMinimizeResult res = minimize_box(neg, x0, lo, hi, local);
        if (!res.line_search_failed) any_success = true;
        if (-res.value > best.value) {
            best.value = -res.value;
            best.x = res.x;
        }
    }
    best.fallback_raw = !any_success;
    return best;
}

}  // namespace tierbo
