// SPDX-License-Identifier: Apache-2.0

#include "tierbo/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include "tierbo/acquisition.hpp"
#include "tierbo/errors.hpp"
#include "tierbo/scalar.hpp"
#include "tierbo/sobol.hpp"
#include "tierbo/stats.hpp"
#include "tierbo/surfaces.hpp"

namespace tierbo {

namespace {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix(mix(a, b), c);
}

// Portable uniform double in [0, 1): top 53 bits of the engine output.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct StrategyTraits {
    bool composite = false;  // per-output surrogates
    bool blackbox = false;   // single surrogate on scalar scores
    bool ehvi = false;
    bool sobol = false;
};

StrategyTraits traits_of(Strategy s) {
    switch (s) {
        case Strategy::BotierComposite:
        case Strategy::PenaltyComposite:
            return {.composite = true};
        case Strategy::BotierBlackbox:
        case Strategy::ChimeraBlackbox:
        case Strategy::PenaltyBlackbox:
            return {.blackbox = true};
        case Strategy::Ehvi:
            return {.composite = true, .ehvi = true};
        case Strategy::Sobol:
            return {.sobol = true};
    }
    return {};
}

struct RepeatRunner {
    const CampaignConfig& config;
    const SurfaceDef& def;
    const Hierarchy& hierarchy;
    Eigen::VectorXd thresholds;
    int repeat = 0;
    std::uint64_t repeat_seed = 0;

    std::vector<Eigen::VectorXd> xs, ys, psis;
    std::vector<double> xi_exact;

    Eigen::VectorXd evaluate_point(const Eigen::VectorXd& x) {
        return def.evaluate_one(x);
    }

    void append(const Eigen::VectorXd& x) {
        const Eigen::VectorXd y = evaluate_point(x);
        const DerivedObjectives derived = derive_psi(x, y, hierarchy);
        xs.push_back(x);
        ys.push_back(y);
        psis.push_back(derived.psi);
        xi_exact.push_back(
            botier_score(derived.psi, derived.thresholds, ScoreParams{.k = config.k, .exact = true}));
    }

    std::vector<FittedSurrogate> fit_output_models() {
        const Eigen::Index n = static_cast<Eigen::Index>(xs.size());
        Eigen::MatrixXd X(n, def.input_dim);
        for (Eigen::Index i = 0; i < n; ++i) X.row(i) = xs[i].transpose();
        std::vector<FittedSurrogate> models;
        models.reserve(def.output_dim);
        for (int m = 0; m < def.output_dim; ++m) {
            Eigen::VectorXd y(n);
            for (Eigen::Index i = 0; i < n; ++i) y[i] = ys[i][m];
            FitOptions options;
            options.seed = mix(repeat_seed, 0x617u + static_cast<std::uint64_t>(m), n);
            models.push_back(fit(X, y, def.lower, def.upper, options));
        }
        return models;
    }

    FittedSurrogate fit_score_model(const std::vector<double>& scores) {
        const Eigen::Index n = static_cast<Eigen::Index>(xs.size());
        Eigen::MatrixXd X(n, def.input_dim);
        Eigen::VectorXd y(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            X.row(i) = xs[i].transpose();
            y[i] = scores[i];
        }
        FitOptions options;
        options.seed = mix(repeat_seed, 0x5C0BEu, n);
        return fit(X, y, def.lower, def.upper, options);
    }

    std::vector<double> blackbox_scores() const {
        std::vector<double> scores;
        scores.reserve(psis.size());
        if (config.strategy == Strategy::ChimeraBlackbox) {
            return chimera_score(psis, thresholds);
        }
        for (const auto& psi : psis) {
            if (config.strategy == Strategy::PenaltyBlackbox) {
                scores.push_back(penalty_score(psi, thresholds));
            } else {
                scores.push_back(botier_score(psi, thresholds, ScoreParams{.exact = true}));
            }
        }
        return scores;
    }

    Eigen::VectorXd propose(int iteration) {
        const StrategyTraits traits = traits_of(config.strategy);
        const std::uint64_t iter_seed = mix(repeat_seed, 0xACF0u, iteration);
        OptimizeAcqfOptions opt;
        opt.seed = mix(iter_seed, 0x5EEDu);

        if (traits.blackbox) {
            const std::vector<double> scores = blackbox_scores();
            const FittedSurrogate model = fit_score_model(scores);
            const double incumbent = *std::max_element(scores.begin(), scores.end());
            const auto acq = [&](const Eigen::VectorXd& x) {
                return analytic_ei(model, incumbent, x.transpose())[0];
            };
            return optimize_acqf(acq, def.lower, def.upper, opt).x;
        }

        std::vector<FittedSurrogate> models = fit_output_models();
        const Eigen::MatrixXd base =
            sobol_normal_samples(config.mc_samples, def.output_dim, mix(iter_seed, 0xBA5Eu));

        if (traits.ehvi) {
            EhviContext ctx;
            ctx.models = &models;
            ctx.hierarchy = &hierarchy;
            Eigen::MatrixXd observed(static_cast<Eigen::Index>(psis.size()), hierarchy.size());
            for (std::size_t i = 0; i < psis.size(); ++i) {
                observed.row(static_cast<Eigen::Index>(i)) = psis[i].transpose();
            }
            ctx.pareto = pareto_front(observed);
            // Reference point: observed minimum padded by 10% of the range.
            ctx.ref.resize(hierarchy.size());
            for (int j = 0; j < hierarchy.size(); ++j) {
                const double lo = observed.col(j).minCoeff();
                const double hi = observed.col(j).maxCoeff();
                const double range = hi - lo;
                const double pad = range > 0.0 ? 0.1 * range : 0.1 * std::max(1.0, std::abs(lo));
                ctx.ref[j] = lo - pad;
            }
            ctx.base_samples = base;
            const auto acq = [&](const Eigen::VectorXd& x) { return ehvi(ctx, x); };
            return optimize_acqf(acq, def.lower, def.upper, opt).x;
        }

        AcqContext ctx;
        ctx.models = &models;
        ctx.hierarchy = &hierarchy;
        ctx.score_params = ScoreParams{.k = config.k, .exact = config.exact_score};
        ctx.score = config.strategy == Strategy::PenaltyComposite ? CompositeScore::Penalty
                                                                  : CompositeScore::BoTier;
        double incumbent = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < psis.size(); ++i) {
            const double score = ctx.score == CompositeScore::Penalty
                                     ? penalty_score(psis[i], thresholds)
                                     : xi_exact[i];
            incumbent = std::max(incumbent, score);
        }
        ctx.incumbent = incumbent;
        ctx.base_samples = base;
        const auto acq = [&](const Eigen::VectorXd& x) { return mc_composite_ei(ctx, x); };
        return optimize_acqf(acq, def.lower, def.upper, opt).x;
    }

    RepeatResult run() {
        const StrategyTraits traits = traits_of(config.strategy);
        RepeatResult result;

        if (traits.sobol) {
            // Model-free baseline: the whole budget comes from one scrambled
            // stream, no iterative machinery.
            SobolStream stream(def.input_dim, mix(repeat_seed, 0x50B0u));
            const Eigen::MatrixXd U = stream.draw(config.budget);
            const Eigen::MatrixXd X = scale_to_bounds(U, def.lower, def.upper);
            for (Eigen::Index i = 0; i < X.rows(); ++i) append(X.row(i).transpose());
        } else {
            std::mt19937_64 seed_rng(mix(repeat_seed, 0xA11CEu));
            for (int s = 0; s < config.n_seed; ++s) {
                Eigen::VectorXd x(def.input_dim);
                for (int c = 0; c < def.input_dim; ++c) {
                    x[c] = def.lower[c] + (def.upper[c] - def.lower[c]) * uniform01(seed_rng);
                }
                append(x);
            }
            SobolStream fallback(def.input_dim, mix(repeat_seed, 0xFA11u));
            while (static_cast<int>(xs.size()) < config.budget) {
                const int iteration = static_cast<int>(xs.size()) + 1;
                Eigen::VectorXd x_next;
                try {
                    x_next = propose(iteration);
                } catch (const NumericalError&) {
                    x_next =
                        scale_to_bounds(fallback.draw(1), def.lower, def.upper).row(0).transpose();
                    ++result.fallback_count;
                }
                append(x_next);
            }
        }

        // Metric extraction from the observation log only.
        const int n_obj = hierarchy.size();
        result.first_hit.assign(n_obj, config.budget + 1);
        double best = -std::numeric_limits<double>::infinity();
        std::size_t best_index = 0;
        int cum_max_n = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xi_exact[i] > best) {
                best = xi_exact[i];
                best_index = i;
            }
            const int n_sat = count_satisfied(psis[i], thresholds);
            cum_max_n = std::max(cum_max_n, n_sat);
            for (int n = 1; n <= n_sat; ++n) {
                if (result.first_hit[n - 1] > static_cast<int>(i) + 1) {
                    result.first_hit[n - 1] = static_cast<int>(i) + 1;
                }
            }
            IterationRecord rec;
            rec.iteration = static_cast<int>(i) + 1;
            rec.x = xs[i];
            rec.y = ys[i];
            rec.psi = psis[i];
            rec.xi_exact = xi_exact[i];
            rec.best_xi = best;
            rec.n_satisfied_best = count_satisfied(psis[best_index], thresholds);
            rec.cum_max_n = cum_max_n;
            result.records.push_back(std::move(rec));
        }
        return result;
    }
};

double quantile(std::vector<double> sorted, double p) {
    // Linear interpolation between order statistics (type 7).
    if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
    const double h = p * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

Strategy strategy_from_string(const std::string& name) {
    if (name == "botier-composite") return Strategy::BotierComposite;
    if (name == "botier-blackbox") return Strategy::BotierBlackbox;
    if (name == "chimera-blackbox") return Strategy::ChimeraBlackbox;
    if (name == "penalty-blackbox") return Strategy::PenaltyBlackbox;
    if (name == "penalty-composite") return Strategy::PenaltyComposite;
    if (name == "ehvi") return Strategy::Ehvi;
    if (name == "sobol") return Strategy::Sobol;
    throw NotFoundError("unknown strategy: " + name);
}

std::string to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::BotierComposite: return "botier-composite";
        case Strategy::BotierBlackbox: return "botier-blackbox";
        case Strategy::ChimeraBlackbox: return "chimera-blackbox";
        case Strategy::PenaltyBlackbox: return "penalty-blackbox";
        case Strategy::PenaltyComposite: return "penalty-composite";
        case Strategy::Ehvi: return "ehvi";
        case Strategy::Sobol: return "sobol";
    }
    return "unknown";
}

std::vector<std::string> strategy_names() {
    return {"botier-composite", "botier-blackbox", "chimera-blackbox", "penalty-blackbox",
            "penalty-composite", "ehvi", "sobol"};
}

void CampaignConfig::validate() const {
    if (budget < 1 || n_seed < 1 || budget < n_seed) {
        throw std::invalid_argument("campaign: require budget >= n_seed >= 1");
    }
    if (repeats < 1) {
        throw std::invalid_argument("campaign: repeats must be >= 1");
    }
    if (!(k > 0.0)) {
        throw std::invalid_argument("campaign: smoothness k must be positive");
    }
    if (mc_samples < 1) {
        throw std::invalid_argument("campaign: mc_samples must be >= 1");
    }
    const SurfaceDef& def = tierbo::surface(surface);
    resolved_hierarchy().validate(def.input_dim, def.output_dim);
}

Hierarchy CampaignConfig::resolved_hierarchy() const {
    if (hierarchy) return *hierarchy;
    return default_hierarchy(surface, starred);
}

CampaignResult run_campaign(const CampaignConfig& config, int jobs) {
    config.validate();
    const SurfaceDef& def = surface(config.surface);
    const Hierarchy hierarchy = config.resolved_hierarchy();
    const Eigen::VectorXd thresholds = derived_thresholds(hierarchy);

    CampaignResult result;
    result.config = config;
    result.repeats.resize(config.repeats);

    std::atomic<int> cursor{0};
    auto worker = [&]() {
        while (true) {
            const int r = cursor.fetch_add(1);
            if (r >= config.repeats) break;
            RepeatRunner runner{.config = config,
                                .def = def,
                                .hierarchy = hierarchy,
                                .thresholds = thresholds,
                                .repeat = r,
                                .repeat_seed = mix(config.master_seed, 0xC0FFEEu, r)};
            result.repeats[static_cast<std::size_t>(r)] = runner.run();
        }
    };

    const int n_threads = std::max(1, std::min(jobs, config.repeats));
    if (n_threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return result;
}

AggregateCurves aggregate(const std::vector<RepeatResult>& repeats) {
    if (repeats.size() < 2) {
        throw std::invalid_argument("aggregate: need at least two repeats");
    }
    const std::size_t budget = repeats.front().records.size();
    const std::size_t n_obj = repeats.front().first_hit.size();
    for (const auto& rep : repeats) {
        if (rep.records.size() != budget || rep.first_hit.size() != n_obj) {
            throw std::invalid_argument("aggregate: mismatched budgets across repeats");
        }
    }
    const double n = static_cast<double>(repeats.size());

    AggregateCurves curves;
    curves.mean_best_xi.resize(budget);
    curves.se_best_xi.resize(budget);
    for (std::size_t t = 0; t < budget; ++t) {
        double mean = 0.0;
        for (const auto& rep : repeats) mean += rep.records[t].best_xi;
        mean /= n;
        double var = 0.0;
        for (const auto& rep : repeats) {
            const double d = rep.records[t].best_xi - mean;
            var += d * d;
        }
        var /= (n - 1.0);
        curves.mean_best_xi[t] = mean;
        curves.se_best_xi[t] = std::sqrt(var / n);
    }

    curves.satisfaction_probability.assign(n_obj, std::vector<double>(budget, 0.0));
    curves.first_hit_quantiles.resize(n_obj);
    curves.censored_counts.assign(n_obj, 0);
    for (std::size_t j = 0; j < n_obj; ++j) {
        std::vector<double> hits;
        hits.reserve(repeats.size());
        for (const auto& rep : repeats) {
            const int hit = rep.first_hit[j];
            hits.push_back(hit);
            if (hit > static_cast<int>(budget)) ++curves.censored_counts[j];
            for (std::size_t t = 0; t < budget; ++t) {
                if (hit <= static_cast<int>(t) + 1) {
                    curves.satisfaction_probability[j][t] += 1.0 / n;
                }
            }
        }
        std::sort(hits.begin(), hits.end());
        curves.first_hit_quantiles[j] = {quantile(hits, 0.25), quantile(hits, 0.5),
                                         quantile(hits, 0.75)};
    }
    for (const auto& rep : repeats) curves.total_fallbacks += rep.fallback_count;
    return curves;
}

RankCorrelationResult rank_correlation_study(const std::string& name, bool starred,
                                             int n_points) {
    const SurfaceDef& def = surface(name);
    const Hierarchy hierarchy = default_hierarchy(name, starred);
    const Eigen::VectorXd thresholds = derived_thresholds(hierarchy);

    SobolStream stream(def.input_dim);  // unscrambled, zero point skipped
    RankCorrelationResult out;
    out.X = scale_to_bounds(stream.draw(n_points), def.lower, def.upper);
    out.Y = evaluate(name, out.X);
    out.psi.reserve(n_points);
    out.xi.reserve(n_points);
    for (Eigen::Index i = 0; i < out.X.rows(); ++i) {
        const DerivedObjectives derived =
            derive_psi(out.X.row(i).transpose(), out.Y.row(i).transpose(), hierarchy);
        out.psi.push_back(derived.psi);
        out.xi.push_back(botier_score(derived.psi, thresholds, ScoreParams{.exact = true}));
    }
    out.chi = chimera_score(out.psi, thresholds);
    out.spearman_r = spearman(out.xi, out.chi);
    return out;
}

}  // namespace tierbo
