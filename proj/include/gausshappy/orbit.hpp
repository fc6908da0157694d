#pragma once

#include <vector>

#include "gausshappy/gaussian_int.hpp"

namespace gausshappy {

/// The unit-and-conjugation orbit {z, -z, iz, -iz, conj z, -conj z,
/// i conj z, -i conj z}, deduplicated and sorted by (re, im).
/// Happiness and height are constant on these orbits.
std::vector<GaussianInt> unit_orbit(const GaussianInt& z);

/// Deterministic representative of unit_orbit(z): the element with maximal
/// real part, ties broken by maximal imaginary part. Idempotent and constant
/// on each orbit.
GaussianInt canonical_rep(const GaussianInt& z);

}  // namespace gausshappy
