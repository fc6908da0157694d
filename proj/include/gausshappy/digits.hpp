#pragma once

#include <cstdint>
#include <vector>

#include "gausshappy/gaussian_int.hpp"

namespace gausshappy {

/// One position of a signed base-B expansion: digit a_j of the real part
/// paired with digit b_j of the imaginary part. |a_j|, |b_j| <= B-1 and every
/// nonzero digit carries the sign of its component.
struct DigitPair {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const DigitPair&, const DigitPair&) = default;
};

/// Signed componentwise base-B expansion, least-significant pair first.
/// Zero is the empty pair list.
struct DigitExpansion {
    long base = 10;
    std::vector<DigitPair> pairs;
    int sign_re = 0;  // -1, 0, +1
    int sign_im = 0;
};

/// Componentwise signed radix expansion of z in base B.
/// Supports any base 2 <= B <= 2^62 (digits are machine words).
DigitExpansion to_digits(const GaussianInt& z, long base);

/// Evaluates sum (a_j + b_j i) B^j exactly. Rejects expansions that violate
/// the sign/magnitude/leading-pair invariants instead of normalizing them.
GaussianInt from_digits(const DigitExpansion& e);

/// The Gaussian B-happy function: sum of squares of the signed digit pairs
/// of z. s_b(0) = 0.
GaussianInt s_b(const GaussianInt& z, long base);

/// Rational restriction of s_b; exact for any machine-word value.
std::int64_t s_b_i64(std::int64_t v, long base);

namespace detail {

/// Machine-word digit walk over a pair of components known to fit int64.
/// Bit-identical to the general path; used by the grid scanners.
void s_b_small(std::int64_t re, std::int64_t im, long base, std::int64_t& out_re,
               std::int64_t& out_im);

/// General-path s_b that never takes the machine-word shortcut (test hook).
GaussianInt s_b_general(const GaussianInt& z, long base);

/// True when both components of z fit the machine-word fast path for base.
bool small_eligible(const GaussianInt& z, long base);

}  // namespace detail

}  // namespace gausshappy
