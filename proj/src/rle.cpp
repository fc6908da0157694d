#include "gausshappy/rle.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gausshappy/errors.hpp"

namespace gausshappy {

namespace {

constexpr long kMaxMaterializePositions = 4'000'000;

void merge_push(std::vector<RleRun>& runs, RleRun run) {
    if (run.count == 0) return;
    if (!runs.empty() && runs.back().pair == run.pair) {
        runs.back().count += run.count;
    } else {
        runs.push_back(std::move(run));
    }
}

}  // namespace

void validate_numeral(const RleNumeral& n) {
    require_base(n.base);
    auto bad = [](const std::string& msg) { throw std::invalid_argument("rle numeral: " + msg); };
    if (!n.runs.empty() && n.runs.front().pair == DigitPair{0, 0}) {
        bad("leading run is (0,0)");
    }
    int sign_re = 0, sign_im = 0;
    for (std::size_t i = 0; i < n.runs.size(); ++i) {
        const RleRun& run = n.runs[i];
        if (run.count < 1) bad("run count < 1 at run " + std::to_string(i));
        if (std::llabs(run.pair.a) > n.base - 1 || std::llabs(run.pair.b) > n.base - 1) {
            bad("digit out of range at run " + std::to_string(i));
        }
        if (i > 0 && n.runs[i - 1].pair == run.pair) bad("adjacent runs share a pair");
        const int sa = run.pair.a > 0 ? 1 : (run.pair.a < 0 ? -1 : 0);
        const int sb = run.pair.b > 0 ? 1 : (run.pair.b < 0 ? -1 : 0);
        if (sa != 0) {
            if (sign_re == 0) sign_re = sa;
            else if (sign_re != sa) bad("mixed real digit signs");
        }
        if (sb != 0) {
            if (sign_im == 0) sign_im = sb;
            else if (sign_im != sb) bad("mixed imaginary digit signs");
        }
    }
}

mpz_class rle_position_count(const RleNumeral& n) {
    mpz_class total(0);
    for (const RleRun& run : n.runs) total += run.count;
    return total;
}

RleNumeral r_b(const mpz_class& t, long base) {
    require_base(base);
    if (t < 1) throw std::invalid_argument("r_b requires t >= 1");
    RleNumeral n;
    n.base = base;
    n.runs = {RleRun{DigitPair{1, 0}, t}, RleRun{DigitPair{0, 0}, 1}};
    return n;
}

GaussianInt s_b_rle(const RleNumeral& n) {
    validate_numeral(n);
    mpz_class sq(0), cross(0);
    for (const RleRun& run : n.runs) {
        sq += run.count * (mpz_class(run.pair.a) * run.pair.a - mpz_class(run.pair.b) * run.pair.b);
        cross += run.count * (mpz_class(run.pair.a) * run.pair.b);
    }
    return {std::move(sq), 2 * cross};
}

RleNumeral rle_shift(const RleNumeral& n, const mpz_class& r) {
    validate_numeral(n);
    if (r < 0) throw std::invalid_argument("rle_shift requires r >= 0");
    RleNumeral out = n;
    if (r == 0 || out.runs.empty()) return out;
    merge_push(out.runs, RleRun{DigitPair{0, 0}, r});
    return out;
}

RleNumeral rle_add_low(const RleNumeral& n, const GaussianInt& w) {
    validate_numeral(n);
    if (w.re < 0 || w.im < 0) {
        throw std::invalid_argument("rle_add_low requires componentwise nonnegative w");
    }
    if (w.is_zero()) return n;

    const mpz_class zero_len =
        (!n.runs.empty() && n.runs.back().pair == DigitPair{0, 0}) ? n.runs.back().count : 0;
    const DigitExpansion w_digits = to_digits(w, n.base);
    const long w_len = static_cast<long>(w_digits.pairs.size());
    if (zero_len < w_len) {
        throw std::invalid_argument(
            "rle_add_low: low-order zero run too short (length " + zero_len.get_str() +
            ", need " + std::to_string(w_len) + ") for " + to_string(w));
    }

    RleNumeral out;
    out.base = n.base;
    out.runs.assign(n.runs.begin(), n.runs.end() - 1);
    merge_push(out.runs, RleRun{DigitPair{0, 0}, zero_len - w_len});
    for (long j = w_len; j-- > 0;) {
        merge_push(out.runs, RleRun{w_digits.pairs[static_cast<std::size_t>(j)], 1});
    }
    validate_numeral(out);
    return out;
}

GaussianInt rle_value(const RleNumeral& n) {
    validate_numeral(n);
    const mpz_class positions = rle_position_count(n);
    if (positions > kMaxMaterializePositions) {
        throw CapacityError("rle numeral with " + positions.get_str() +
                            " positions exceeds the materialization budget");
    }
    const mpz_class base(n.base);
    mpz_class re(0), im(0), pow(0), repunit(0);
    for (const RleRun& run : n.runs) {
        const unsigned long c = run.count.get_ui();
        mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), c);
        repunit = (pow - 1) / (base - 1);
        re = re * pow + run.pair.a * repunit;
        im = im * pow + run.pair.b * repunit;
    }
    return {std::move(re), std::move(im)};
}

}  // namespace gausshappy
