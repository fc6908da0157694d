#pragma once

#include <vector>

#include "gausshappy/digits.hpp"
#include "gausshappy/gaussian_int.hpp"

namespace gausshappy {

/// One maximal run of a repeated digit pair.
struct RleRun {
    DigitPair pair;
    mpz_class count;

    friend bool operator==(const RleRun&, const RleRun&) = default;
};

/// Run-length-encoded base-B numeral, most significant run first, with no
/// positional gaps (a gap is an explicit (0,0) run). Run counts are big
/// integers: these numerals routinely have more digits than could ever be
/// materialized. Zero is the empty run list.
struct RleNumeral {
    long base = 10;
    std::vector<RleRun> runs;

    friend bool operator==(const RleNumeral&, const RleNumeral&) = default;
};

/// Throws std::invalid_argument unless n satisfies all numeral invariants
/// (digit ranges, componentwise sign consistency, maximal runs, nonzero
/// leading pair, positive counts).
void validate_numeral(const RleNumeral& n);

/// Total number of digit positions (sum of run counts).
mpz_class rle_position_count(const RleNumeral& n);

/// R_B(t) = sum_{j=1..t} B^j as a two-run numeral: digit 1 at positions
/// 1..t, digit 0 at position 0. Right inverse of s_b: s_b_rle(r_b(t)) = t.
RleNumeral r_b(const mpz_class& t, long base);

/// s_b evaluated run-by-run: sum of count * (a^2 - b^2, 2ab) over the runs.
GaussianInt s_b_rle(const RleNumeral& n);

/// Multiplies by B^r by extending the low-order zero run. s_b_rle is
/// unchanged; the value gains r trailing zero positions.
RleNumeral rle_shift(const RleNumeral& n, const mpz_class& r);

/// Writes the digit expansion of w (componentwise nonnegative) into the
/// low-order zero run of n, which must be long enough to hold it
/// (B^len(zero run) > max component of w, the additive-split hypothesis).
/// s_b_rle(result) = s_b_rle(n) + s_b(w, base).
RleNumeral rle_add_low(const RleNumeral& n, const GaussianInt& w);

/// Exact value of the numeral. Guarded: refuses numerals whose position
/// count exceeds the materialization budget.
GaussianInt rle_value(const RleNumeral& n);

}  // namespace gausshappy
