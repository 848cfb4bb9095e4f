#include <doctest.h>

#include "surface_fixtures.hpp"
#include "tierbo/errors.hpp"
#include "tierbo/objectives.hpp"
#include "tierbo/sobol.hpp"
#include "tierbo/surfaces.hpp"

using namespace tierbo;

TEST_CASE("registry contents") {
    const auto names = surface_names();
    REQUIRE(names.size() == 4);
    CHECK(surface("BNH").input_dim == 2);
    CHECK(surface("BNH").output_dim == 2);
    CHECK(surface("DH4").input_dim == 6);
    CHECK(surface("DTLZ5").input_dim == 4);
    CHECK(surface("ZDT1").input_dim == 10);
    CHECK_THROWS_AS(surface("nope"), NotFoundError);
    CHECK_THROWS_AS(default_hierarchy("nope", false), NotFoundError);
}

TEST_CASE("hand-evaluated corner values") {
    Eigen::MatrixXd x(1, 10);
    x.setZero();
    const Eigen::MatrixXd zdt = evaluate("ZDT1", x);
    CHECK(zdt(0, 0) == doctest::Approx(0.0));
    CHECK(zdt(0, 1) == doctest::Approx(-1.0));

    Eigen::MatrixXd b(1, 2);
    b.setZero();
    const Eigen::MatrixXd bnh = evaluate("BNH", b);
    CHECK(bnh(0, 0) == doctest::Approx(0.0));
    CHECK(bnh(0, 1) == doctest::Approx(-50.0));
}

TEST_CASE("bound-box corners evaluate finite") {
    for (const auto& name : surface_names()) {
        const SurfaceDef& def = surface(name);
        const int d = def.input_dim;
        const int corners = d <= 10 ? (1 << d) : 1024;
        for (int mask = 0; mask < corners; ++mask) {
            Eigen::VectorXd x(d);
            for (int i = 0; i < d; ++i) {
                x[i] = ((mask >> i) & 1) ? def.upper[i] : def.lower[i];
            }
            const Eigen::VectorXd y = def.evaluate_one(x);
            CHECK(y.allFinite());
            CHECK(y.size() == def.output_dim);
        }
    }
}

TEST_CASE("out-of-bounds and wrong shapes are rejected") {
    Eigen::MatrixXd x(1, 2);
    x << 6.0, 0.0;
    CHECK_THROWS_AS(evaluate("BNH", x), std::invalid_argument);
    Eigen::MatrixXd wrong(1, 3);
    wrong.setZero();
    CHECK_THROWS_AS(evaluate("BNH", wrong), std::invalid_argument);
}

TEST_CASE("frozen fixtures from an independent transcription") {
    for (const auto& fixture : fixtures::surface_cases()) {
        const SurfaceDef& def = surface(fixture.name);
        for (std::size_t p = 0; p < fixture.x.size(); ++p) {
            Eigen::VectorXd x(def.input_dim);
            for (int i = 0; i < def.input_dim; ++i) x[i] = fixture.x[p][i];
            const Eigen::VectorXd y = def.evaluate_one(x);
            for (int m = 0; m < def.output_dim; ++m) {
                CHECK(y[m] == doctest::Approx(fixture.y[p][m]).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("default hierarchies match the reference table") {
    {
        const Hierarchy h = default_hierarchy("BNH", false);
        REQUIRE(h.size() == 2);
        CHECK(h.objectives[0].threshold == -60.0);
        CHECK(h.objectives[1].threshold == -11.0);
    }
    {
        const Hierarchy h = default_hierarchy("BNH", true);
        REQUIRE(h.size() == 3);
        CHECK(h.objectives[0].threshold == -60.0);
        CHECK(h.objectives[1].source.kind == ObjectiveSource::Kind::InputAffine);
        CHECK(h.objectives[1].direction == Direction::Maximize);
        CHECK(h.objectives[1].threshold == 2.0);
        CHECK(h.objectives[2].threshold == -15.0);
    }
    {
        const Hierarchy h = default_hierarchy("ZDT1", true);
        REQUIRE(h.size() == 3);
        CHECK(h.objectives[0].threshold == -0.18);
        CHECK(h.objectives[1].direction == Direction::Minimize);
        CHECK(h.objectives[1].threshold == 0.5);
        CHECK(h.objectives[2].threshold == -2.5);
    }
    {
        const Hierarchy h = default_hierarchy("DH4", true);
        REQUIRE(h.size() == 3);
        CHECK(h.objectives[1].threshold == 0.6);
        CHECK(h.objectives[2].threshold == -15.0);
    }
    {
        const Hierarchy h = default_hierarchy("DTLZ5", true);
        REQUIRE(h.size() == 3);
        CHECK(h.objectives[1].direction == Direction::Minimize);
        CHECK(h.objectives[1].threshold == 1.0);
    }
}

TEST_CASE("every reference objective is satisfiable but not trivial") {
    // ~1e5 low-discrepancy points per surface: each threshold's satisfaction
    // fraction must be strictly inside (0, 1).
    const int n = 100000;
    for (const auto& name : surface_names()) {
        for (const bool starred : {false, true}) {
            const SurfaceDef& def = surface(name);
            const Hierarchy h = default_hierarchy(name, starred);
            SobolStream stream(def.input_dim);
            const Eigen::MatrixXd X = scale_to_bounds(stream.draw(n), def.lower, def.upper);
            const Eigen::MatrixXd Y = evaluate(name, X);
            Eigen::VectorXi counts = Eigen::VectorXi::Zero(h.size());
            for (int r = 0; r < n; ++r) {
                const auto derived =
                    derive_psi(X.row(r).transpose(), Y.row(r).transpose(), h);
                for (int j = 0; j < h.size(); ++j) {
                    if (derived.psi[j] >= derived.thresholds[j]) ++counts[j];
                }
            }
            for (int j = 0; j < h.size(); ++j) {
                INFO(name << (starred ? "*" : "") << " objective " << j);
                CHECK(counts[j] > 0);
                CHECK(counts[j] < n);
            }
        }
    }
}
