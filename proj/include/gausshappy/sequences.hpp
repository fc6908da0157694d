#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gausshappy/gaussian_int.hpp"

namespace gausshappy {

/// True iff z = 1 mod (1+i), equivalently re(z) + im(z) is odd. For odd
/// bases every happy number lies in this coset.
bool in_onepi_coset(const GaussianInt& z);

/// Smallest a in [1, bound] such that a, a+d, ..., a+(len-1)d are all
/// rational B-happy. nullopt means not found within the bound (existence
/// beyond it is guaranteed for d = gcd(2, B-1)).
std::optional<std::int64_t> rational_consecutive(long base, std::int64_t d, int len,
                                                 std::int64_t bound);

/// Smallest start z under (norm, re, im) with z + jD happy for 0 <= j < len,
/// scanning norms up to norm_bound.
std::optional<GaussianInt> gaussian_consecutive(long base, const GaussianInt& diff, int len,
                                                long long norm_bound);

/// The differences D' != D whose consecutive sequences are equivalent to
/// D-consecutive ones: unit_orbit(D) minus D itself, (re, im)-sorted.
std::vector<GaussianInt> related_differences(const GaussianInt& diff);

}  // namespace gausshappy
