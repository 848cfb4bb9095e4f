// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace tierbo {

/// Standard normal density.
double normal_pdf(double z);

/// Standard normal CDF via erfc.
double normal_cdf(double z);

/// Inverse standard normal CDF (Wichura's AS241 rational approximations,
/// accurate to ~1e-15).  p must lie in (0, 1).
double inverse_normal_cdf(double p);

/// Fractional ranks (1-based, ties averaged).
std::vector<double> average_ranks(const std::vector<double>& values);

/// Spearman rank correlation with average ranks for ties.  Returns NaN when
/// either input has zero rank variance (undefined correlation).
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace tierbo
