// SPDX-License-Identifier: Apache-2.0

#include "tierbo/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace tierbo {

namespace {

inline double hard_step(double x) {
    return x >= 0.0 ? 1.0 : 0.0;
}

void check_lengths(const Eigen::VectorXd& psi, const Eigen::VectorXd& t) {
    if (psi.size() == 0) {
        throw std::invalid_argument("objective vector must not be empty");
    }
    if (psi.size() != t.size()) {
        throw std::invalid_argument("objective/threshold length mismatch: " +
                                    std::to_string(psi.size()) + " vs " +
                                    std::to_string(t.size()));
    }
}

}  // namespace

double smooth_heaviside(double x, double k) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("smooth_heaviside: x must be finite");
    }
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("smooth_heaviside: k must be positive and finite");
    }
    const double z = k * x;
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double smooth_min(double a, double b, double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("smooth_min: k must be positive and finite");
    }
    const double m = std::min(a, b);
    const double wa = std::exp(-k * (a - m));
    const double wb = std::exp(-k * (b - m));
    return (a * wa + b * wb) / (wa + wb);
}

Eigen::Vector2d smooth_min_grad(double a, double b, double k) {
    const double m = std::min(a, b);
    const double ea = std::exp(-k * (a - m));
    const double eb = std::exp(-k * (b - m));
    const double wa = ea / (ea + eb);
    const double wb = eb / (ea + eb);
    // d/da [wa*a + wb*b] with dwa/da = -k wa wb
    const double cross = k * wa * wb * (a - b);
    return {wa - cross, wb + cross};
}

double botier_score(const Eigen::VectorXd& psi, const Eigen::VectorXd& t,
                    const ScoreParams& params) {
    check_lengths(psi, t);
    double total = 0.0;
    double gate = 1.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        if (params.exact) {
            total += std::min(psi[i], t[i]) * gate;
            gate *= hard_step(psi[i] - t[i]);
            if (gate == 0.0) break;
        } else {
            total += smooth_min(psi[i], t[i], params.k) * gate;
            gate *= smooth_heaviside(psi[i] - t[i], params.k);
        }
    }
    return total;
}

Eigen::VectorXd botier_grad_psi(const Eigen::VectorXd& psi, const Eigen::VectorXd& t,
                                double k) {
    check_lengths(psi, t);
    const Eigen::Index n = psi.size();
    Eigen::VectorXd mins(n), dmins(n), gates(n), dgates(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        mins[i] = smooth_min(psi[i], t[i], k);
        dmins[i] = smooth_min_grad(psi[i], t[i], k)[0];
        const double h = smooth_heaviside(psi[i] - t[i], k);
        gates[i] = h;
        dgates[i] = k * h * (1.0 - h);
    }
    // term_i = mins[i] * prod_{j<i} gates[j]; differentiating w.r.t. psi_p
    // hits the min factor when p == i and gate p when p < i.
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index p = 0; p <= i; ++p) {
            double factor = (p == i) ? dmins[i] : mins[i];
            for (Eigen::Index j = 0; j < i; ++j) {
                factor *= (j == p) ? dgates[j] : gates[j];
            }
            grad[p] += factor;
        }
    }
    return grad;
}

std::vector<double> chimera_score(const std::vector<Eigen::VectorXd>& dataset_psi,
                                  const Eigen::VectorXd& t) {
    if (dataset_psi.empty()) {
        throw std::invalid_argument("chimera_score: dataset must not be empty");
    }
    const Eigen::Index n_obj = t.size();
    for (const auto& psi : dataset_psi) {
        check_lengths(psi, t);
    }

    // Per-objective maxima over the whole dataset.
    Eigen::VectorXd maxima = dataset_psi.front();
    for (const auto& psi : dataset_psi) {
        maxima = maxima.cwiseMax(psi);
    }

    std::vector<double> scores;
    scores.reserve(dataset_psi.size());
    for (const auto& psi : dataset_psi) {
        double chi = psi[0] * hard_step(t[0] - psi[0]);
        double shift = 0.0;
        double gate = 1.0;
        for (Eigen::Index i = 1; i < n_obj; ++i) {
            shift += maxima[i - 1];
            gate *= hard_step(psi[i - 1] - t[i - 1]);
            chi += (psi[i] + shift) * hard_step(t[i] - psi[i]) * gate;
        }
        gate *= hard_step(psi[n_obj - 1] - t[n_obj - 1]);
        chi += (psi[0] + shift + maxima[n_obj - 1]) * gate;
        scores.push_back(chi);
    }
    return scores;
}

double penalty_score(const Eigen::VectorXd& psi, const Eigen::VectorXd& t,
                     const Eigen::VectorXd& weights) {
    check_lengths(psi, t);
    if (weights.size() != psi.size()) {
        throw std::invalid_argument("penalty_score: weight length mismatch");
    }
    double penalty = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        penalty += weights[i] * std::max(t[i] - psi[i], 0.0);
    }
    return psi[0] - penalty;
}

double penalty_score(const Eigen::VectorXd& psi, const Eigen::VectorXd& t) {
    return penalty_score(psi, t, Eigen::VectorXd::Ones(psi.size()));
}

}  // namespace tierbo
