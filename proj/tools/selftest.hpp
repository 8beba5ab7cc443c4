#pragma once

#include <cstdint>

#include "keypoly/serialization.hpp"

namespace keypoly::cli {

/// Quick oracle cross-checks: {"suite": "selftest", "cases": N, "failures": [...]}.
Json run_selftest(std::uint64_t seed);

}  // namespace keypoly::cli
