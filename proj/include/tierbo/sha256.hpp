// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace tierbo {

/// Hex digest of the SHA-256 of a byte string.
std::string sha256_hex(const std::string& data);

}  // namespace tierbo
