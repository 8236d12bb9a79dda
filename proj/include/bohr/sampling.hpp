#pragma once

#include <cstdint>
#include <vector>

#include "bohr/exponential_sum.hpp"

namespace bohr {

/// Radical inverse of index in the given base (van der Corput).
double radical_inverse(std::uint64_t index, unsigned base);

/// First n points of the 2-D Halton sequence (bases 2, 3, starting at index 1)
/// mapped onto [alpha, beta] x [-t_extent, t_extent]. Deterministic.
std::vector<HalfPlanePoint> strip_samples(const Strip& strip, double t_extent, int n);

}  // namespace bohr
