// SPDX-License-Identifier: Apache-2.0

#include "tierbo/optimize.hpp"

#include <cmath>
#include <deque>

namespace tierbo {

namespace {

Eigen::VectorXd clamp_to_box(Eigen::VectorXd x, const Eigen::VectorXd& lo,
                             const Eigen::VectorXd& hi) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        x[i] = std::min(std::max(x[i], lo[i]), hi[i]);
    }
    return x;
}

}  // namespace

BoxMinimizeResult minimize_box(const BoxObjective& objective, Eigen::VectorXd x0,
                               const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                               const BoxMinimizeOptions& options) {
    const Eigen::Index n = x0.size();
    BoxMinimizeResult result;
    result.x = clamp_to_box(std::move(x0), lo, hi);

    Eigen::VectorXd grad(n);
    double f = objective(result.x, &grad);

    std::deque<Eigen::VectorXd> s_hist, y_hist;
    std::deque<double> rho_hist;

    for (int iter = 0; iter < options.max_iter; ++iter) {
        result.iterations = iter;
        // Projected-gradient stationarity check.
        const Eigen::VectorXd pg = result.x - clamp_to_box(result.x - grad, lo, hi);
        if (pg.lpNorm<Eigen::Infinity>() <= options.grad_tol) {
            break;
        }

        // Two-loop recursion.
        Eigen::VectorXd q = grad;
        std::vector<double> alphas(s_hist.size());
        for (std::size_t i = s_hist.size(); i-- > 0;) {
            alphas[i] = rho_hist[i] * s_hist[i].dot(q);
            q -= alphas[i] * y_hist[i];
        }
        if (!s_hist.empty()) {
            const double gamma =
                s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
            q *= gamma;
        }
        for (std::size_t i = 0; i < s_hist.size(); ++i) {
            const double beta = rho_hist[i] * y_hist[i].dot(q);
            q += (alphas[i] - beta) * s_hist[i];
        }
        Eigen::VectorXd direction = -q;
        if (direction.dot(grad) > -1e-14 * grad.norm() * direction.norm()) {
            direction = -grad;  // not a descent direction, fall back
        }

        // Backtracking Armijo line search on the projected path.
        constexpr double kArmijo = 1e-4;
        double step = 1.0;
        bool accepted = false;
        Eigen::VectorXd x_new;
        double f_new = f;
        for (int ls = 0; ls < 40; ++ls) {
            x_new = clamp_to_box(result.x + step * direction, lo, hi);
            const Eigen::VectorXd dx = x_new - result.x;
            if (dx.lpNorm<Eigen::Infinity>() == 0.0) {
                break;
            }
            f_new = objective(x_new, nullptr);
            if (std::isfinite(f_new) && f_new <= f + kArmijo * grad.dot(dx)) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            if (!s_hist.empty()) {
                // Retry from a clean steepest-descent state once.
                s_hist.clear();
                y_hist.clear();
                rho_hist.clear();
                continue;
            }
            result.line_search_failed = true;
            break;
        }

        Eigen::VectorXd grad_new(n);
        f_new = objective(x_new, &grad_new);

        const Eigen::VectorXd s = x_new - result.x;
        const Eigen::VectorXd y = grad_new - grad;
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            s_hist.push_back(s);
            y_hist.push_back(y);
            rho_hist.push_back(1.0 / sy);
            if (static_cast<int>(s_hist.size()) > options.memory) {
                s_hist.pop_front();
                y_hist.pop_front();
                rho_hist.pop_front();
            }
        }

        const double f_old = f;
        result.x = std::move(x_new);
        grad = std::move(grad_new);
        f = f_new;
        if (std::abs(f_old - f) <= options.f_tol * (1.0 + std::abs(f_old))) {
            break;
        }
    }
    result.value = f;
    return result;
}

BoxObjective with_fd_gradient(std::function<double(const Eigen::VectorXd&)> f, double h) {
    return [f = std::move(f), h](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
        const double value = f(x);
        if (grad != nullptr) {
            grad->resize(x.size());
            Eigen::VectorXd xp = x;
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                const double orig = xp[i];
                xp[i] = orig + h;
                const double fp = f(xp);
                xp[i] = orig - h;
                const double fm = f(xp);
                xp[i] = orig;
                (*grad)[i] = (fp - fm) / (2.0 * h);
            }
        }
        return value;
    };
}

}  // namespace tierbo
