#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace gausshappy {

/// Exact Gaussian integer. Components are arbitrary-precision; no operation
/// in this library ever rounds.
struct GaussianInt {
    mpz_class re;
    mpz_class im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianInt(long r, long i) : re(r), im(i) {}
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const GaussianInt& x, const GaussianInt& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const GaussianInt& x, const GaussianInt& y) { return !(x == y); }

    friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianInt operator-(const GaussianInt& x) { return {-x.re, -x.im}; }
    friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
};

inline GaussianInt conj(const GaussianInt& z) { return {z.re, -z.im}; }

/// z * i
inline GaussianInt mul_i(const GaussianInt& z) { return {-z.im, z.re}; }

/// re^2 + im^2, always >= 0, zero iff z = 0.
inline mpz_class norm(const GaussianInt& z) { return z.re * z.re + z.im * z.im; }

/// Total order used everywhere a deterministic ordering is needed:
/// by norm, then re, then im.
int norm_re_im_cmp(const GaussianInt& x, const GaussianInt& y);

struct NormReImLess {
    bool operator()(const GaussianInt& x, const GaussianInt& y) const {
        return norm_re_im_cmp(x, y) < 0;
    }
};

/// Lexicographic (re, im) order; used for canonical element listings.
struct ReImLess {
    bool operator()(const GaussianInt& x, const GaussianInt& y) const {
        int c = cmp(x.re, y.re);
        if (c != 0) return c < 0;
        return cmp(x.im, y.im) < 0;
    }
};

std::size_t hash_value(const GaussianInt& z);

struct GaussianIntHash {
    std::size_t operator()(const GaussianInt& z) const { return hash_value(z); }
};

/// Canonical text form: "a+bi" / "a-bi" with zero parts omitted, "0" for zero,
/// unit imaginary parts rendered as "i" / "-i".
std::string to_string(const GaussianInt& z);

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

}  // namespace gausshappy
