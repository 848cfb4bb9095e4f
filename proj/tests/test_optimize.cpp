#include <doctest.h>

#include <cmath>

#include "tierbo/optimize.hpp"

using namespace tierbo;

namespace {

Eigen::VectorXd vec2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

}  // namespace

TEST_CASE("minimize_box finds an interior quadratic minimum") {
    const BoxObjective rosen_like = [](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
        const double dx = x[0] - 0.3, dy = x[1] - 0.7;
        if (grad) {
            grad->resize(2);
            (*grad)[0] = 2.0 * dx;
            (*grad)[1] = 8.0 * dy;
        }
        return dx * dx + 4.0 * dy * dy;
    };
    const auto res = minimize_box(rosen_like, vec2(0.9, 0.1), vec2(0.0, 0.0), vec2(1.0, 1.0));
    CHECK(res.x[0] == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(res.x[1] == doctest::Approx(0.7).epsilon(1e-6));
    CHECK_FALSE(res.line_search_failed);
}

TEST_CASE("minimize_box pins active bounds") {
    // minimum of (x+1)^2 over [0,1] sits on the lower bound
    const BoxObjective f = [](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
        if (grad) {
            grad->resize(1);
            (*grad)[0] = 2.0 * (x[0] + 1.0);
        }
        return (x[0] + 1.0) * (x[0] + 1.0);
    };
    Eigen::VectorXd lo(1), hi(1), x0(1);
    lo << 0.0;
    hi << 1.0;
    x0 << 0.7;
    const auto res = minimize_box(f, x0, lo, hi);
    CHECK(res.x[0] == doctest::Approx(0.0));
}

TEST_CASE("minimize_box on a nonconvex curve beats its start") {
    const BoxObjective f = [](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
        if (grad) {
            grad->resize(1);
            (*grad)[0] = std::cos(3.0 * x[0]) * 3.0 + 0.4 * x[0];
        }
        return std::sin(3.0 * x[0]) + 0.2 * x[0] * x[0];
    };
    Eigen::VectorXd lo(1), hi(1), x0(1);
    lo << -3.0;
    hi << 3.0;
    x0 << 1.3;
    const auto res = minimize_box(f, x0, lo, hi);
    Eigen::VectorXd g;
    CHECK(res.value <= f(x0, nullptr));
}

TEST_CASE("fd gradient wrapper approximates analytic derivatives") {
    const auto value_only = [](const Eigen::VectorXd& x) {
        return std::sin(x[0]) * std::exp(0.5 * x[1]);
    };
    const BoxObjective wrapped = with_fd_gradient(value_only, 1e-6);
    Eigen::VectorXd x = vec2(0.4, -0.2);
    Eigen::VectorXd grad;
    const double f = wrapped(x, &grad);
    CHECK(f == doctest::Approx(value_only(x)));
    CHECK(grad[0] == doctest::Approx(std::cos(0.4) * std::exp(-0.1)).epsilon(1e-7));
    CHECK(grad[1] == doctest::Approx(0.5 * std::sin(0.4) * std::exp(-0.1)).epsilon(1e-7));
}
