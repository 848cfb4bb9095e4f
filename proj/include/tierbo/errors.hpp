// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace tierbo {

// Linear-algebra breakdowns (Cholesky failure after jitter escalation, etc.).
// Carries a diagnostics string assembled at the failure site.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Lookup of an unregistered name (surface, strategy, ...).
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tierbo
