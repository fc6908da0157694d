#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gausshappy/gaussian_int.hpp"
#include "gausshappy/rle.hpp"

namespace gausshappy {

/// The sequence-length requirements behind the (1+i)-consecutive witness:
/// m_needed = max{ S_B(2 S_B(k)) : 1 <= k <= m } rational happy terms, and
/// shift r = 1 + max{ k, 2 S_B(k) : 1 <= k <= m }.
struct WitnessParams {
    std::int64_t m_needed = 0;
    std::int64_t shift = 0;
};

WitnessParams required_params(long base, std::int64_t m);

/// Verification record for one term b*B^r + k(1+i).
struct WitnessTermCheck {
    std::int64_t k = 0;
    std::string term_runs;     // symbolic numeral, runs as (a,b)^count
    mpz_class term_positions;  // digit count of the term
    GaussianInt after_two;     // s_b applied twice, symbolically then densely
    GaussianInt expected;      // a + d*M - S_B(2 S_B(k))
    bool landing_ok = false;
    bool landing_happy = false;
};

/// Machine-checked certificate that b*B^r + k(1+i), 1 <= k <= m, is an
/// m-term (1+i)-consecutive sequence of Gaussian B-happy numbers, built from
/// a supplied run of M d-consecutive rational B-happy numbers.
struct WitnessReport {
    long base = 10;
    std::int64_t m = 0;
    std::int64_t a = 0;             // rational input sequence start
    std::int64_t d = 0;             // rational input difference
    std::int64_t m_supplied = 0;    // rational input length
    std::int64_t m_required = 0;
    std::int64_t shift = 0;         // r
    std::string b_runs;             // symbolic b = R_B(R_B(a+dM) B^r)
    std::vector<WitnessTermCheck> checks;
    bool valid = false;
};

/// Executes the witness construction symbolically (b is never materialized)
/// and verifies the landing identity and landing happiness for every k.
/// Preconditions are checked up front: d must equal gcd(2, B-1), the
/// supplied sequence must be happy throughout (reported with the failing
/// index), and m_supplied must reach required_params(base, m).m_needed.
WitnessReport build_witness(long base, std::int64_t m, std::int64_t a, std::int64_t d,
                            std::int64_t m_supplied);

}  // namespace gausshappy
