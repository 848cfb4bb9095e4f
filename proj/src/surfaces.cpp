// SPDX-License-Identifier: Apache-2.0

#include "tierbo/surfaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tierbo/errors.hpp"

namespace tierbo {

namespace {

Eigen::VectorXd make_vec(std::initializer_list<double> vals) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
    Eigen::Index i = 0;
    for (double x : vals) v[i++] = x;
    return v;
}

// Binh-Korn, two inputs on [0,5] x [0,3].
Eigen::VectorXd eval_bnh(const Eigen::VectorXd& x) {
    const double f0 = 4.0 * (x[0] * x[0] + x[1] * x[1]);
    const double f1 = (x[0] - 5.0) * (x[0] - 5.0) + (x[1] - 5.0) * (x[1] - 5.0);
    return make_vec({-f0, -f1});
}

// DH4, six inputs on [0,1] x [-0.15,1] x [-1,1]^4.
Eigen::VectorXd eval_dh4(const Eigen::VectorXd& x) {
    const double s01 = x[0] + x[1];
    const double a1 = (s01 - 0.35) / 0.25;
    const double a2 = (s01 - 0.85) / 0.03;
    const double h = 2.0 - 0.8 * std::exp(-a1 * a1) - std::exp(-a2 * a2);
    double g = 0.0;
    for (Eigen::Index i = 2; i < x.size(); ++i) g += x[i] * x[i];
    g *= 50.0;
    const double s = 1.0 - std::sqrt(x[0]);
    return make_vec({-s01, -(h * (g + s))});
}

// DTLZ5 with two objectives, four inputs on [0,1]^4.
Eigen::VectorXd eval_dtlz5(const Eigen::VectorXd& x) {
    double g = 0.0;
    for (Eigen::Index i = 1; i < x.size(); ++i) {
        const double d = x[i] - 0.5;
        g += d * d;
    }
    const double theta = x[0] * std::numbers::pi / 2.0;
    const double f0 = (1.0 + g) * std::cos(theta);
    const double f1 = (1.0 + g) * std::sin(theta);
    return make_vec({-f0, -f1});
}

// ZDT1, ten inputs on [0,1]^10.
Eigen::VectorXd eval_zdt1(const Eigen::VectorXd& x) {
    const double f0 = x[0];
    double sum = 0.0;
    for (Eigen::Index i = 1; i < x.size(); ++i) sum += x[i];
    const double g = 1.0 + 9.0 * sum / static_cast<double>(x.size() - 1);
    const double f1 = g * (1.0 - std::sqrt(f0 / g));
    return make_vec({-f0, -f1});
}

std::vector<SurfaceDef> build_registry() {
    std::vector<SurfaceDef> defs;

    {
        SurfaceDef d;
        d.name = "BNH";
        d.input_dim = 2;
        d.output_dim = 2;
        d.lower = make_vec({0.0, 0.0});
        d.upper = make_vec({5.0, 3.0});
        d.evaluate_one = eval_bnh;
        defs.push_back(std::move(d));
    }
    {
        SurfaceDef d;
        d.name = "DH4";
        d.input_dim = 6;
        d.output_dim = 2;
        d.lower = make_vec({0.0, -0.15, -1.0, -1.0, -1.0, -1.0});
        d.upper = make_vec({1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
        d.evaluate_one = eval_dh4;
        defs.push_back(std::move(d));
    }
    {
        SurfaceDef d;
        d.name = "DTLZ5";
        d.input_dim = 4;
        d.output_dim = 2;
        d.lower = Eigen::VectorXd::Zero(4);
        d.upper = Eigen::VectorXd::Ones(4);
        d.evaluate_one = eval_dtlz5;
        defs.push_back(std::move(d));
    }
    {
        SurfaceDef d;
        d.name = "ZDT1";
        d.input_dim = 10;
        d.output_dim = 2;
        d.lower = Eigen::VectorXd::Zero(10);
        d.upper = Eigen::VectorXd::Ones(10);
        d.evaluate_one = eval_zdt1;
        defs.push_back(std::move(d));
    }
    return defs;
}

const std::vector<SurfaceDef>& registry() {
    static const std::vector<SurfaceDef> defs = build_registry();
    return defs;
}

ObjectiveSpec output_obj(const std::string& name, int index, double threshold) {
    ObjectiveSpec spec;
    spec.name = name;
    spec.source = ObjectiveSource::output(index);
    spec.direction = Direction::Maximize;
    spec.threshold = threshold;
    return spec;
}

ObjectiveSpec input_obj(const std::string& name, std::vector<std::pair<int, double>> coeffs,
                        Direction dir, double threshold) {
    ObjectiveSpec spec;
    spec.name = name;
    spec.source = ObjectiveSource::input_affine(std::move(coeffs));
    spec.direction = dir;
    spec.threshold = threshold;
    return spec;
}

}  // namespace

const SurfaceDef& surface(const std::string& name) {
    for (const auto& def : registry()) {
        if (def.name == name) return def;
    }
    throw NotFoundError("unknown surface: " + name);
}

std::vector<std::string> surface_names() {
    std::vector<std::string> names;
    for (const auto& def : registry()) names.push_back(def.name);
    return names;
}

Eigen::MatrixXd evaluate(const std::string& name, const Eigen::MatrixXd& X) {
    const SurfaceDef& def = surface(name);
    if (X.cols() != def.input_dim) {
        throw std::invalid_argument("evaluate: expected " + std::to_string(def.input_dim) +
                                    " columns for " + name);
    }
    constexpr double kBoundsTol = 1e-9;
    Eigen::MatrixXd Y(X.rows(), def.output_dim);
    for (Eigen::Index r = 0; r < X.rows(); ++r) {
        Eigen::VectorXd x = X.row(r).transpose();
        for (Eigen::Index c = 0; c < x.size(); ++c) {
            if (!(x[c] >= def.lower[c] - kBoundsTol && x[c] <= def.upper[c] + kBoundsTol)) {
                throw std::invalid_argument("evaluate: point out of bounds for " + name);
            }
        }
        Y.row(r) = def.evaluate_one(x).transpose();
    }
    return Y;
}

Hierarchy default_hierarchy(const std::string& name, bool starred) {
    const SurfaceDef& def = surface(name);  // throws for unknown names
    Hierarchy h;
    if (def.name == "BNH") {
        h.objectives.push_back(output_obj("y0", 0, -60.0));
        if (starred) {
            h.objectives.push_back(
                input_obj("x0_minus_x1", {{0, 1.0}, {1, -1.0}}, Direction::Maximize, 2.0));
            h.objectives.push_back(output_obj("y1", 1, -15.0));
        } else {
            h.objectives.push_back(output_obj("y1", 1, -11.0));
        }
    } else if (def.name == "DH4") {
        h.objectives.push_back(output_obj("y0", 0, -0.15));
        if (starred) {
            h.objectives.push_back(input_obj("x1", {{1, 1.0}}, Direction::Maximize, 0.6));
        }
        h.objectives.push_back(output_obj("y1", 1, -15.0));
    } else if (def.name == "DTLZ5") {
        h.objectives.push_back(output_obj("y0", 0, -0.5));
        if (starred) {
            h.objectives.push_back(
                input_obj("x2_plus_x3", {{2, 1.0}, {3, 1.0}}, Direction::Minimize, 1.0));
        }
        h.objectives.push_back(output_obj("y1", 1, -0.95));
    } else if (def.name == "ZDT1") {
        h.objectives.push_back(output_obj("y0", 0, -0.18));
        if (starred) {
            h.objectives.push_back(
                input_obj("x1_plus_x5", {{1, 1.0}, {5, 1.0}}, Direction::Minimize, 0.5));
        }
        h.objectives.push_back(output_obj("y1", 1, -2.5));
    }
    h.validate(def.input_dim, def.output_dim);
    return h;
}

}  // namespace tierbo
