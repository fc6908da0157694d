#include "gausshappy/digits.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gausshappy/errors.hpp"

namespace gausshappy {

namespace {

// Digits are held in int64; bases beyond 2^62 would not fit.
constexpr long long kMaxBase = 1ll << 62;

// Cap for the machine-word fast path: keeps every digit square and the
// accumulated sums comfortably inside int64 (<= 64 digits * (B-1)^2 < 2^37).
constexpr long kSmallBaseMax = 1l << 15;

void check_base(long base) {
    require_base(base);
    if (base > kMaxBase) {
        throw CapacityError("base " + std::to_string(base) + " exceeds the digit-word limit");
    }
}

int sign_of(const mpz_class& v) { return mpz_sgn(v.get_mpz_t()); }

// Unsigned digits of |v|, least significant first.
std::vector<std::int64_t> magnitude_digits(const mpz_class& v, long base) {
    std::vector<std::int64_t> out;
    mpz_class n = abs(v);
    mpz_class q, r;
    const mpz_class b(base);
    while (n != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), b.get_mpz_t());
        out.push_back(static_cast<std::int64_t>(r.get_si()));
        n = q;
    }
    return out;
}

}  // namespace

DigitExpansion to_digits(const GaussianInt& z, long base) {
    check_base(base);
    DigitExpansion e;
    e.base = base;
    e.sign_re = sign_of(z.re);
    e.sign_im = sign_of(z.im);
    auto da = magnitude_digits(z.re, base);
    auto db = magnitude_digits(z.im, base);
    const std::size_t n = std::max(da.size(), db.size());
    e.pairs.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        e.pairs[j].a = j < da.size() ? e.sign_re * da[j] : 0;
        e.pairs[j].b = j < db.size() ? e.sign_im * db[j] : 0;
    }
    return e;
}

GaussianInt from_digits(const DigitExpansion& e) {
    check_base(e.base);
    auto bad = [](const std::string& msg) { throw std::invalid_argument("from_digits: " + msg); };
    if (e.sign_re < -1 || e.sign_re > 1 || e.sign_im < -1 || e.sign_im > 1) {
        bad("component sign must be -1, 0, or +1");
    }
    if (!e.pairs.empty() && e.pairs.back() == DigitPair{0, 0}) {
        bad("most significant pair is (0,0)");
    }
    for (std::size_t j = 0; j < e.pairs.size(); ++j) {
        const auto& p = e.pairs[j];
        if (std::llabs(p.a) > e.base - 1 || std::llabs(p.b) > e.base - 1) {
            bad("digit out of range at position " + std::to_string(j));
        }
        if ((p.a > 0 && e.sign_re != 1) || (p.a < 0 && e.sign_re != -1)) {
            bad("real digit sign mismatch at position " + std::to_string(j));
        }
        if ((p.b > 0 && e.sign_im != 1) || (p.b < 0 && e.sign_im != -1)) {
            bad("imaginary digit sign mismatch at position " + std::to_string(j));
        }
    }
    mpz_class re(0), im(0);
    for (std::size_t j = e.pairs.size(); j-- > 0;) {
        re = re * e.base + e.pairs[j].a;
        im = im * e.base + e.pairs[j].b;
    }
    return {std::move(re), std::move(im)};
}

namespace detail {

void s_b_small(std::int64_t re, std::int64_t im, long base, std::int64_t& out_re,
               std::int64_t& out_im) {
    const std::uint64_t b = static_cast<std::uint64_t>(base);
    std::uint64_t ma = re < 0 ? 0ull - static_cast<std::uint64_t>(re) : static_cast<std::uint64_t>(re);
    std::uint64_t mb = im < 0 ? 0ull - static_cast<std::uint64_t>(im) : static_cast<std::uint64_t>(im);
    std::int64_t sq = 0, cross = 0;
    while (ma != 0 || mb != 0) {
        const std::int64_t da = static_cast<std::int64_t>(ma % b);
        const std::int64_t db = static_cast<std::int64_t>(mb % b);
        sq += da * da - db * db;
        cross += da * db;
        ma /= b;
        mb /= b;
    }
    const int sa = re > 0 ? 1 : (re < 0 ? -1 : 0);
    const int sb = im > 0 ? 1 : (im < 0 ? -1 : 0);
    out_re = sq;
    out_im = 2 * sa * sb * cross;
}

GaussianInt s_b_general(const GaussianInt& z, long base) {
    const DigitExpansion e = to_digits(z, base);
    mpz_class sq(0), cross(0);
    for (const DigitPair& p : e.pairs) {
        sq += mpz_class(p.a) * p.a - mpz_class(p.b) * p.b;
        cross += mpz_class(p.a) * p.b;
    }
    return {std::move(sq), 2 * cross};
}

bool small_eligible(const GaussianInt& z, long base) {
    return base <= kSmallBaseMax && mpz_fits_slong_p(z.re.get_mpz_t()) &&
           mpz_fits_slong_p(z.im.get_mpz_t());
}

}  // namespace detail

GaussianInt s_b(const GaussianInt& z, long base) {
    check_base(base);
    if (detail::small_eligible(z, base)) {
        std::int64_t r, i;
        detail::s_b_small(z.re.get_si(), z.im.get_si(), base, r, i);
        return {mpz_class(static_cast<long>(r)), mpz_class(static_cast<long>(i))};
    }
    return detail::s_b_general(z, base);
}

std::int64_t s_b_i64(std::int64_t v, long base) {
    check_base(base);
    if (base <= kSmallBaseMax) {
        std::int64_t r, i;
        detail::s_b_small(v, 0, base, r, i);
        return r;
    }
    GaussianInt out = detail::s_b_general(GaussianInt(mpz_class(static_cast<long>(v)), 0), base);
    return static_cast<std::int64_t>(out.re.get_si());
}

}  // namespace gausshappy
