#include "gausshappy/gaussian_int.hpp"

#include <ostream>
#include <sstream>

namespace gausshappy {

int norm_re_im_cmp(const GaussianInt& x, const GaussianInt& y) {
    int c = cmp(norm(x), norm(y));
    if (c != 0) return c;
    c = cmp(x.re, y.re);
    if (c != 0) return c;
    return cmp(x.im, y.im);
}

namespace {

std::size_t hash_mpz(const mpz_class& v) {
    const mpz_srcptr p = v.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_size(p)) * 0x9e3779b97f4a7c15ull;
    if (mpz_sgn(p) < 0) h = ~h;
    for (std::size_t i = 0; i < mpz_size(p); ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(p, i)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace

std::size_t hash_value(const GaussianInt& z) {
    std::size_t h = hash_mpz(z.re);
    h ^= hash_mpz(z.im) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::string to_string(const GaussianInt& z) {
    if (z.is_zero()) return "0";
    std::ostringstream out;
    if (z.re != 0) out << z.re;
    if (z.im != 0) {
        if (z.im == 1) {
            out << (z.re != 0 ? "+i" : "i");
        } else if (z.im == -1) {
            out << "-i";
        } else {
            if (z.re != 0 && z.im > 0) out << '+';
            out << z.im << 'i';
        }
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << to_string(z); }

}  // namespace gausshappy
