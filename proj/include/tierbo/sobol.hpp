// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

namespace tierbo {

namespace detail {

struct SobolDirection {
    std::uint32_t poly;
    int degree;
    std::uint32_t m[18];
};

extern const SobolDirection kSobolTable[];
extern const int kSobolTableDims;

}  // namespace detail

/// Gray-code Sobol sequence from Joe/Kuo direction numbers, 32-bit
/// resolution.  Unscrambled streams start past the all-zeros point;
/// scrambled streams apply hash-based nested (Owen) scrambling keyed by
/// `scramble_seed` and emit from index 0.  Two streams with the same
/// (dim, scramble_seed) produce identical sequences; the cursor is the only
/// mutable state.
class SobolStream {
public:
    explicit SobolStream(int dim, std::optional<std::uint64_t> scramble_seed = std::nullopt);

    int dim() const { return dim_; }
    std::uint64_t index() const { return index_; }

    /// Next point in [0,1)^dim.
    Eigen::VectorXd next();

    /// n consecutive points, one per row.
    Eigen::MatrixXd draw(int n);

    /// Repositions the cursor to an absolute sequence index.
    void seek(std::uint64_t index);

private:
    int dim_;
    std::optional<std::uint64_t> seed_;
    std::uint64_t index_ = 0;               // index of the point `state_` holds
    std::vector<std::uint32_t> directions_;  // dim_ x 32, row-major per bit
    std::vector<std::uint32_t> state_;
};

/// Affine map from the unit cube onto [lo, hi] per coordinate, row-wise.
Eigen::MatrixXd scale_to_bounds(const Eigen::MatrixXd& unit, const Eigen::VectorXd& lo,
                                const Eigen::VectorXd& hi);

/// Inverse of scale_to_bounds.
Eigen::MatrixXd scale_from_bounds(const Eigen::MatrixXd& X, const Eigen::VectorXd& lo,
                                  const Eigen::VectorXd& hi);

/// n x dim block of standard-normal quasi-random draws: a scrambled Sobol
/// stream mapped through the inverse normal CDF.
Eigen::MatrixXd sobol_normal_samples(int n, int dim, std::uint64_t seed);

}  // namespace tierbo
