// SPDX-License-Identifier: Apache-2.0

#include "tierbo/sobol.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "tierbo/stats.hpp"

namespace tierbo {

namespace {

constexpr int kBits = 32;
constexpr double kInv32 = 1.0 / 4294967296.0;  // 2^-32

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

// Nested uniform scrambling: every node of the depth-32 binary tree gets an
// independent pseudo-random flip derived from (seed, level, prefix).
std::uint32_t owen_scramble(std::uint32_t x, std::uint64_t seed) {
    std::uint32_t out = 0;
    for (int bit = kBits - 1; bit >= 0; --bit) {
        const std::uint64_t prefix = (bit == kBits - 1) ? 0u : (x >> (bit + 1));
        const std::uint64_t h = mix(seed, (prefix << 6) | static_cast<std::uint64_t>(bit));
        const std::uint32_t flip = static_cast<std::uint32_t>(h & 1u);
        out |= (((x >> bit) & 1u) ^ flip) << bit;
    }
    return out;
}

}  // namespace

SobolStream::SobolStream(int dim, std::optional<std::uint64_t> scramble_seed)
    : dim_(dim), seed_(scramble_seed) {
    if (dim < 1 || dim > detail::kSobolTableDims) {
        throw std::invalid_argument("SobolStream: dim must be in [1, " +
                                    std::to_string(detail::kSobolTableDims) + "]");
    }
    directions_.assign(static_cast<std::size_t>(dim_) * kBits, 0);
    for (int d = 0; d < dim_; ++d) {
        std::uint32_t* v = &directions_[static_cast<std::size_t>(d) * kBits];
        if (d == 0) {
            for (int i = 0; i < kBits; ++i) v[i] = 1u << (kBits - 1 - i);
            continue;
        }
        const auto& row = detail::kSobolTable[d];
        const int s = row.degree;
        const std::uint32_t a = (row.poly & ~(1u << s)) >> 1;  // interior coefficients
        for (int i = 0; i < s; ++i) v[i] = row.m[i] << (kBits - 1 - i);
        for (int i = s; i < kBits; ++i) {
            v[i] = v[i - s] ^ (v[i - s] >> s);
            for (int k = 1; k < s; ++k) {
                v[i] ^= ((a >> (s - 1 - k)) & 1u) * v[i - k];
            }
        }
    }
    state_.assign(dim_, 0);
    if (!seed_) {
        seek(1);  // skip the all-zeros point
    }
}

void SobolStream::seek(std::uint64_t index) {
    // Gray-code construction: point n is the XOR of direction numbers at the
    // set bits of gray(n).
    std::fill(state_.begin(), state_.end(), 0u);
    const std::uint64_t gray = index ^ (index >> 1);
    for (int bit = 0; bit < kBits; ++bit) {
        if ((gray >> bit) & 1u) {
            for (int d = 0; d < dim_; ++d) {
                state_[d] ^= directions_[static_cast<std::size_t>(d) * kBits + bit];
            }
        }
    }
    index_ = index;
}

Eigen::VectorXd SobolStream::next() {
    Eigen::VectorXd point(dim_);
    for (int d = 0; d < dim_; ++d) {
        std::uint32_t value = state_[d];
        if (seed_) {
            value = owen_scramble(value, mix(*seed_, static_cast<std::uint64_t>(d)));
        }
        point[d] = static_cast<double>(value) * kInv32;
    }
    const int low_zero = std::countr_zero(index_ + 1);
    for (int d = 0; d < dim_; ++d) {
        state_[d] ^= directions_[static_cast<std::size_t>(d) * kBits + low_zero];
    }
    ++index_;
    return point;
}

Eigen::MatrixXd SobolStream::draw(int n) {
    if (n < 1) {
        throw std::invalid_argument("SobolStream::draw: n must be >= 1");
    }
    Eigen::MatrixXd points(n, dim_);
    for (int i = 0; i < n; ++i) {
        points.row(i) = next().transpose();
    }
    return points;
}

Eigen::MatrixXd scale_to_bounds(const Eigen::MatrixXd& unit, const Eigen::VectorXd& lo,
                                const Eigen::VectorXd& hi) {
    Eigen::MatrixXd X = unit;
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        X.col(c) = lo[c] + (hi[c] - lo[c]) * X.col(c).array();
    }
    return X;
}

Eigen::MatrixXd scale_from_bounds(const Eigen::MatrixXd& X, const Eigen::VectorXd& lo,
                                  const Eigen::VectorXd& hi) {
    Eigen::MatrixXd unit = X;
    for (Eigen::Index c = 0; c < unit.cols(); ++c) {
        unit.col(c) = (unit.col(c).array() - lo[c]) / (hi[c] - lo[c]);
    }
    return unit;
}

Eigen::MatrixXd sobol_normal_samples(int n, int dim, std::uint64_t seed) {
    SobolStream stream(dim, seed);
    Eigen::MatrixXd samples = stream.draw(n);
    constexpr double kEps = 1.0 / 8589934592.0;  // 2^-33, keeps p inside (0,1)
    for (Eigen::Index i = 0; i < samples.rows(); ++i) {
        for (Eigen::Index j = 0; j < samples.cols(); ++j) {
            const double p = std::min(std::max(samples(i, j), kEps), 1.0 - kEps);
            samples(i, j) = inverse_normal_cdf(p);
        }
    }
    return samples;
}

}  // namespace tierbo
