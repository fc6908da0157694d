#include "gausshappy/witness.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gausshappy/digits.hpp"
#include "gausshappy/errors.hpp"
#include "gausshappy/heights.hpp"

namespace gausshappy {

namespace {

// Keeps R_B(a + dM) representable: its value has a + dM + 1 base-B digits.
constexpr std::int64_t kMaxInnerDigits = 5'000'000;

std::string runs_to_string(const RleNumeral& n) {
    std::ostringstream out;
    out << "base " << n.base << ":";
    if (n.runs.empty()) out << " 0";
    for (const RleRun& run : n.runs) {
        out << " (" << run.pair.a << "," << run.pair.b << ")^" << run.count.get_str();
    }
    return out.str();
}

}  // namespace

WitnessParams required_params(long base, std::int64_t m) {
    require_base(base);
    if (m < 1) throw std::invalid_argument("witness length m must be >= 1");
    WitnessParams p;
    for (std::int64_t k = 1; k <= m; ++k) {
        const std::int64_t sk = s_b_i64(k, base);
        p.m_needed = std::max(p.m_needed, s_b_i64(2 * sk, base));
        p.shift = std::max({p.shift, k, 2 * sk});
    }
    p.shift += 1;
    return p;
}

WitnessReport build_witness(long base, std::int64_t m, std::int64_t a, std::int64_t d,
                            std::int64_t m_supplied) {
    require_base(base);
    if (m < 1) throw std::invalid_argument("witness length m must be >= 1");
    if (a < 1) throw std::invalid_argument("sequence start a must be >= 1");

    const std::int64_t d_expected = std::gcd<std::int64_t>(2, base - 1);
    if (d != d_expected) {
        throw std::invalid_argument("wrong d: base " + std::to_string(base) + " requires d = " +
                                    std::to_string(d_expected));
    }

    const WitnessParams params = required_params(base, m);
    if (m_supplied < params.m_needed) {
        throw std::invalid_argument("M too small: supplied " + std::to_string(m_supplied) +
                                    ", witness for m = " + std::to_string(m) + " requires " +
                                    std::to_string(params.m_needed));
    }

    HeightCache cache(base);
    auto rational_happy = [&cache](const mpz_class& v) {
        return cache.height_of(GaussianInt(v, 0)).has_value();
    };
    for (std::int64_t j = 0; j < m_supplied; ++j) {
        const mpz_class v = mpz_class(static_cast<long>(a)) + mpz_class(static_cast<long>(d)) * j;
        if (!rational_happy(v)) {
            throw std::invalid_argument("supplied sequence is not happy at index " +
                                        std::to_string(j) + " (value " + v.get_str() + ")");
        }
    }

    WitnessReport report;
    report.base = base;
    report.m = m;
    report.a = a;
    report.d = d;
    report.m_supplied = m_supplied;
    report.m_required = params.m_needed;
    report.shift = params.shift;

    const mpz_class a_dm = mpz_class(static_cast<long>(a)) +
                           mpz_class(static_cast<long>(d)) * m_supplied;
    if (a_dm >= kMaxInnerDigits) {
        throw CapacityError("witness inner numeral R_B(" + a_dm.get_str() + ") is too large");
    }

    // b = R_B( R_B(a + dM) * B^r ). The inner value fits in memory; the
    // outer run count is that value itself, so b only ever exists as runs.
    const mpz_class base_z(base);
    mpz_class pow_t1(0);
    mpz_pow_ui(pow_t1.get_mpz_t(), base_z.get_mpz_t(), a_dm.get_ui() + 1);
    const mpz_class inner_value = (pow_t1 - base) / (base_z - 1);  // R_B(a + dM)
    mpz_class pow_r(0);
    mpz_pow_ui(pow_r.get_mpz_t(), base_z.get_mpz_t(), static_cast<unsigned long>(params.shift));
    const mpz_class outer_count = inner_value * pow_r;

    const RleNumeral b_numeral = r_b(outer_count, base);
    report.b_runs = runs_to_string(b_numeral);
    const RleNumeral shifted = rle_shift(b_numeral, params.shift);

    bool all_ok = true;
    for (std::int64_t k = 1; k <= m; ++k) {
        // The additive-split hypothesis must hold at both applications;
        // the shift was chosen to guarantee it, so a miss is a logic error.
        const std::int64_t two_sk = 2 * s_b_i64(k, base);
        if (pow_r <= k || pow_r <= two_sk) {
            throw std::logic_error("witness shift too small for k = " + std::to_string(k));
        }

        WitnessTermCheck check;
        check.k = k;
        const GaussianInt w(mpz_class(static_cast<long>(k)), mpz_class(static_cast<long>(k)));
        const RleNumeral term = rle_add_low(shifted, w);
        check.term_runs = runs_to_string(term);
        check.term_positions = rle_position_count(term);

        const GaussianInt first = s_b_rle(term);
        check.after_two = s_b(first, base);
        check.expected = GaussianInt(a_dm - s_b_i64(two_sk, base), 0);
        check.landing_ok = check.after_two == check.expected;
        check.landing_happy = cache.height_of(check.after_two).has_value();
        all_ok = all_ok && check.landing_ok && check.landing_happy;
        report.checks.push_back(std::move(check));
    }
    report.valid = all_ok;
    return report;
}

}  // namespace gausshappy
