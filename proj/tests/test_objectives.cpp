#include <doctest.h>

#include <random>

#include "tierbo/objectives.hpp"
#include "tierbo/scalar.hpp"
#include "tierbo/surfaces.hpp"

using namespace tierbo;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> values) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

ObjectiveSpec spec_of(const std::string& name, ObjectiveSource source, Direction dir,
                      double threshold,
                      std::optional<std::pair<double, double>> bounds = std::nullopt) {
    ObjectiveSpec spec;
    spec.name = name;
    spec.source = std::move(source);
    spec.direction = dir;
    spec.threshold = threshold;
    spec.norm_bounds = bounds;
    return spec;
}

}  // namespace

TEST_CASE("derive_psi input objective on the starred two-input surface") {
    const Hierarchy h = default_hierarchy("BNH", true);
    const Eigen::VectorXd x = vec({3.0, 0.5});
    const Eigen::VectorXd y = evaluate("BNH", x.transpose()).row(0).transpose();
    const auto derived = derive_psi(x, y, h);
    CHECK(derived.psi[1] == doctest::Approx(2.5));  // x0 - x1
    CHECK(derived.thresholds[1] == doctest::Approx(2.0));
    CHECK(derived.psi[1] >= derived.thresholds[1]);
}

TEST_CASE("derive_psi flips minimize objectives") {
    Hierarchy h;
    h.objectives.push_back(
        spec_of("temp", ObjectiveSource::output(0), Direction::Minimize, 85.0));
    const auto derived = derive_psi(vec({0.0}), vec({85.0}), h);
    CHECK(derived.psi[0] == doctest::Approx(-85.0));
    CHECK(derived.thresholds[0] == doctest::Approx(-85.0));
    CHECK(count_satisfied(derived.psi, derived.thresholds) == 1);  // ties satisfy
}

TEST_CASE("derive_psi applies normalization to value and threshold") {
    Hierarchy h;
    h.objectives.push_back(spec_of("yield", ObjectiveSource::output(0), Direction::Maximize,
                                   65.0, std::pair{0.0, 100.0}));
    const auto derived = derive_psi(vec({0.0}), vec({65.0}), h);
    CHECK(derived.psi[0] == doctest::Approx(0.65));
    CHECK(derived.thresholds[0] == doctest::Approx(0.65));
}

TEST_CASE("derive_psi rejects out-of-range output indices") {
    Hierarchy h;
    h.objectives.push_back(spec_of("bad", ObjectiveSource::output(3), Direction::Maximize, 0.0));
    CHECK_THROWS_AS(derive_psi(vec({0.0}), vec({1.0, 2.0}), h), std::invalid_argument);
}

TEST_CASE("count_satisfied counts the hierarchical prefix") {
    CHECK(count_satisfied(vec({2.0, 0.3}), vec({1.0, 0.5})) == 1);
    CHECK(count_satisfied(vec({2.0, 0.6, 0.1}), vec({1.0, 0.5, 0.5})) == 2);
    CHECK(count_satisfied(vec({2.0, 0.6, 0.9}), vec({1.0, 0.5, 0.5})) == 3);
    // a gap in the middle stops the prefix even if later tiers pass
    CHECK(count_satisfied(vec({2.0, 0.1, 0.9}), vec({1.0, 0.5, 0.5})) == 1);
    CHECK(count_satisfied(vec({0.0, 0.9}), vec({1.0, 0.5})) == 0);
}

TEST_CASE("direction invariance: minimize equals maximize of the negated source") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double threshold = dist(rng);
        Hierarchy minimize_h, maximize_h;
        minimize_h.objectives.push_back(spec_of(
            "a", ObjectiveSource::input_affine({{0, 1.0}, {1, 2.0}}, 0.5), Direction::Minimize,
            threshold));
        maximize_h.objectives.push_back(spec_of(
            "a", ObjectiveSource::input_affine({{0, -1.0}, {1, -2.0}}, -0.5), Direction::Maximize,
            -threshold));
        const Eigen::VectorXd x = vec({dist(rng), dist(rng)});
        const Eigen::VectorXd y = vec({});
        const auto lhs = derive_psi(x, y, minimize_h);
        const auto rhs = derive_psi(x, y, maximize_h);
        CHECK(lhs.psi[0] == doctest::Approx(rhs.psi[0]).epsilon(1e-14));
        CHECK(lhs.thresholds[0] == doctest::Approx(rhs.thresholds[0]).epsilon(1e-14));
        CHECK(count_satisfied(lhs.psi, lhs.thresholds) ==
              count_satisfied(rhs.psi, rhs.thresholds));
    }
}

TEST_CASE("normalization leaves satisfaction counts unchanged") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double threshold = dist(rng);
        const double value = dist(rng);
        Hierarchy plain, normalized;
        plain.objectives.push_back(
            spec_of("a", ObjectiveSource::output(0), Direction::Maximize, threshold));
        normalized.objectives.push_back(spec_of("a", ObjectiveSource::output(0),
                                                Direction::Maximize, threshold,
                                                std::pair{-5.0, 5.0}));
        const Eigen::VectorXd x = vec({0.0});
        const Eigen::VectorXd y = vec({value});
        const auto a = derive_psi(x, y, plain);
        const auto b = derive_psi(x, y, normalized);
        CHECK(count_satisfied(a.psi, a.thresholds) == count_satisfied(b.psi, b.thresholds));
    }
}

TEST_CASE("common normalization preserves the exact-score argmax over a candidate set") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    const ScoreParams exact{.k = 100.0, .exact = true};
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::VectorXd t = vec({dist(rng), dist(rng)});
        // affine map with positive slope applied to every psi and t alike
        const double scale = 0.2 + dist(rng);
        const double offset = dist(rng) - 0.5;
        std::vector<Eigen::VectorXd> candidates;
        for (int i = 0; i < 64; ++i) candidates.push_back(vec({dist(rng), dist(rng)}));
        int argmax_raw = 0, argmax_mapped = 0;
        double best_raw = -1e300, best_mapped = -1e300;
        const Eigen::VectorXd t_mapped = (scale * t.array() + offset).matrix();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const double raw = botier_score(candidates[i], t, exact);
            const Eigen::VectorXd mapped = (scale * candidates[i].array() + offset).matrix();
            const double transformed = botier_score(mapped, t_mapped, exact);
            if (raw > best_raw) {
                best_raw = raw;
                argmax_raw = static_cast<int>(i);
            }
            if (transformed > best_mapped) {
                best_mapped = transformed;
                argmax_mapped = static_cast<int>(i);
            }
        }
        CHECK(argmax_raw == argmax_mapped);
    }
}

TEST_CASE("hierarchy validation") {
    Hierarchy h;
    CHECK_THROWS_AS(h.validate(2, 2), std::invalid_argument);
    h.objectives.push_back(spec_of("a", ObjectiveSource::output(0), Direction::Maximize, 0.0));
    h.objectives.push_back(spec_of("a", ObjectiveSource::output(1), Direction::Maximize, 0.0));
    CHECK_THROWS_AS(h.validate(2, 2), std::invalid_argument);  // duplicate names
    h.objectives[1].name = "b";
    CHECK_NOTHROW(h.validate(2, 2));
    h.objectives[1].norm_bounds = {1.0, 1.0};
    CHECK_THROWS_AS(h.validate(2, 2), std::invalid_argument);  // lo < hi required
}
