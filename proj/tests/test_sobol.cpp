#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "tierbo/sobol.hpp"
#include "tierbo/stats.hpp"

using namespace tierbo;

namespace {

// Exact star discrepancy for a 2D point set: the supremum over anchored boxes
// is attained on the grid of point coordinates (and 1), checking both the
// open and closed counts at each node.
double star_discrepancy_2d(const Eigen::MatrixXd& points) {
    const Eigen::Index n = points.rows();
    std::vector<double> xs, ys;
    for (Eigen::Index i = 0; i < n; ++i) {
        xs.push_back(points(i, 0));
        ys.push_back(points(i, 1));
    }
    xs.push_back(1.0);
    ys.push_back(1.0);
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    double worst = 0.0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (double a : xs) {
        // gather the y-values of points with x < a (open) and x <= a (closed)
        std::vector<double> open_y, closed_y;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (points(i, 0) < a) open_y.push_back(points(i, 1));
            if (points(i, 0) <= a) closed_y.push_back(points(i, 1));
        }
        std::sort(open_y.begin(), open_y.end());
        std::sort(closed_y.begin(), closed_y.end());
        for (double b : ys) {
            const double volume = a * b;
            const auto open_count = static_cast<double>(
                std::lower_bound(open_y.begin(), open_y.end(), b) - open_y.begin());
            const auto closed_count = static_cast<double>(
                std::upper_bound(closed_y.begin(), closed_y.end(), b) - closed_y.begin());
            worst = std::max(worst, std::abs(volume - open_count * inv_n));
            worst = std::max(worst, std::abs(volume - closed_count * inv_n));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("unscrambled stream reproduces the reference sequence") {
    SobolStream stream(1);
    CHECK(stream.next()[0] == doctest::Approx(0.5));
    CHECK(stream.next()[0] == doctest::Approx(0.75));
    CHECK(stream.next()[0] == doctest::Approx(0.25));
    CHECK(stream.next()[0] == doctest::Approx(0.375));

    SobolStream d5(5);
    Eigen::MatrixXd pts = d5.draw(3);
    const double expected[3][5] = {
        {0.5, 0.5, 0.5, 0.5, 0.5},
        {0.75, 0.25, 0.25, 0.25, 0.75},
        {0.25, 0.75, 0.75, 0.75, 0.25},
    };
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 5; ++c) {
            CHECK(pts(r, c) == doctest::Approx(expected[r][c]));
        }
    }

    SobolStream d10(10);
    pts = d10.draw(4);
    const double row4[10] = {0.375, 0.375, 0.625, 0.875, 0.375,
                             0.125, 0.375, 0.875, 0.875, 0.625};
    for (int c = 0; c < 10; ++c) {
        CHECK(pts(3, c) == doctest::Approx(row4[c]));
    }
}

TEST_CASE("points stay in the half-open unit cube") {
    for (int dim : {1, 2, 7, 21}) {
        SobolStream plain(dim);
        SobolStream scrambled(dim, 1234u);
        for (const auto& pts : {plain.draw(512), scrambled.draw(512)}) {
            CHECK(pts.minCoeff() >= 0.0);
            CHECK(pts.maxCoeff() < 1.0);
        }
    }
}

TEST_CASE("streams with the same seed are identical, different seeds differ") {
    SobolStream a(3, 99u), b(3, 99u), c(3, 100u);
    const Eigen::MatrixXd pa = a.draw(64);
    const Eigen::MatrixXd pb = b.draw(64);
    const Eigen::MatrixXd pc = c.draw(64);
    CHECK((pa - pb).cwiseAbs().maxCoeff() == 0.0);
    CHECK((pa - pc).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("seek is consistent with sequential drawing") {
    SobolStream a(4), b(4);
    a.draw(37);
    b.seek(38);
    const Eigen::MatrixXd pa = a.draw(5);
    const Eigen::MatrixXd pb = b.draw(5);
    CHECK((pa - pb).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("bound scaling round-trips") {
    SobolStream stream(3, 7u);
    const Eigen::MatrixXd u = stream.draw(128);
    Eigen::VectorXd lo(3), hi(3);
    lo << -2.0, 0.0, 10.0;
    hi << 3.0, 1.0, 1000.0;
    const Eigen::MatrixXd x = scale_to_bounds(u, lo, hi);
    for (Eigen::Index c = 0; c < 3; ++c) {
        CHECK(x.col(c).minCoeff() >= lo[c]);
        CHECK(x.col(c).maxCoeff() <= hi[c]);
    }
    const Eigen::MatrixXd back = scale_from_bounds(x, lo, hi);
    CHECK((back - u).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("scrambled half retains low discrepancy versus pseudo-random points") {
    const int n = 4096;
    SobolStream stream(2, 2024u);
    const double sobol_disc = star_discrepancy_2d(stream.draw(n));

    std::vector<double> uniform_discs;
    for (int seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(1000 + seed);
        Eigen::MatrixXd pts(n, 2);
        for (int i = 0; i < n; ++i) {
            pts(i, 0) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            pts(i, 1) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }
        uniform_discs.push_back(star_discrepancy_2d(pts));
    }
    std::sort(uniform_discs.begin(), uniform_discs.end());
    const double median_uniform =
        0.5 * (uniform_discs[9] + uniform_discs[10]);
    CHECK(sobol_disc < median_uniform);
}

TEST_CASE("normal mapping produces standard moments") {
    const Eigen::MatrixXd z = sobol_normal_samples(4096, 2, 5u);
    for (Eigen::Index c = 0; c < 2; ++c) {
        const double mean = z.col(c).mean();
        const double var = (z.col(c).array() - mean).square().sum() / (4096 - 1);
        CHECK(std::abs(mean) < 0.05);
        CHECK(var == doctest::Approx(1.0).epsilon(0.05));
    }
}

TEST_CASE("inverse normal cdf round-trips through the cdf") {
    for (double p : {1e-10, 1e-4, 0.2, 0.5, 0.8, 1.0 - 1e-4}) {
        CHECK(normal_cdf(inverse_normal_cdf(p)) == doctest::Approx(p).epsilon(1e-10));
    }
    CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0));
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), std::invalid_argument);
    CHECK_THROWS_AS(inverse_normal_cdf(1.0), std::invalid_argument);
}

TEST_CASE("spearman handles ties and degenerate input") {
    CHECK(spearman({1, 2, 3, 4}, {2, 4, 6, 8}) == doctest::Approx(1.0));
    CHECK(spearman({1, 2, 3, 4}, {8, 6, 4, 2}) == doctest::Approx(-1.0));
    CHECK(std::isnan(spearman({1, 1, 1}, {1, 2, 3})));
    // ties averaged: ranks of {1,1,2} are {1.5,1.5,3}
    const auto ranks = average_ranks({1.0, 1.0, 2.0});
    CHECK(ranks[0] == doctest::Approx(1.5));
    CHECK(ranks[1] == doctest::Approx(1.5));
    CHECK(ranks[2] == doctest::Approx(3.0));
}
