#pragma once

#include <cstdint>

#include "dstokes/diagram.hpp"

namespace dstokes {

/// Rejection-samples a single closed strand with n transverse self-crossings:
/// a random double-occurrence sequence fixes the strand order, a random bit
/// per crossing fixes the rotation chirality, and the planarity count
/// F = n + 2 filters out non-planar rotation systems. The outer face is
/// picked uniformly among faces and a base edge bordering it is designated.
/// Deterministic for a fixed seed.
Diagram generate_random_diagram(int n, std::uint64_t seed, int max_attempts = 200000);

} // namespace dstokes
