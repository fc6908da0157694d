#pragma once

#include <string>
#include <string_view>

#include "gausshappy/gaussian_int.hpp"

namespace gausshappy {

/// Parses a Gaussian-integer literal: optional sign, decimal integer,
/// optional signed decimal integer followed by 'i'. Pure-imaginary forms
/// "i", "-i", "bi" and unit tails "a+i" / "a-i" are accepted. Components are
/// arbitrary precision. Throws ParseError with the offending position.
GaussianInt parse_gaussian(std::string_view text);

/// Renders |v| >= 0 in base-B digit notation: digits 0-9a-z for bases up to
/// 36, bracketed digit lists like [12,0,5] above that.
std::string to_base_string(const mpz_class& v, long base);

/// Canonical "a+bi" rendering with both components written in base-B digit
/// notation (the notation the catalogs are usually read in).
std::string render_in_base(const GaussianInt& z, long base);

}  // namespace gausshappy
