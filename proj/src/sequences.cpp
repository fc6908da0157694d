#include "gausshappy/sequences.hpp"

#include <algorithm>
#include <stdexcept>

#include "gausshappy/errors.hpp"
#include "gausshappy/heights.hpp"
#include "gausshappy/orbit.hpp"

namespace gausshappy {

bool in_onepi_coset(const GaussianInt& z) {
    return mpz_odd_p(mpz_class(z.re + z.im).get_mpz_t()) != 0;
}

std::optional<std::int64_t> rational_consecutive(long base, std::int64_t d, int len,
                                                 std::int64_t bound) {
    require_base(base);
    if (d < 1) throw std::invalid_argument("difference d must be >= 1");
    if (len < 1) throw std::invalid_argument("sequence length must be >= 1");
    HeightCache cache(base);
    auto happy = [&cache](std::int64_t v) {
        return cache.height_of(GaussianInt(mpz_class(static_cast<long>(v)), 0)).has_value();
    };
    for (std::int64_t a = 1; a <= bound; ++a) {
        bool ok = true;
        for (int j = 0; j < len && ok; ++j) ok = happy(a + d * j);
        if (ok) return a;
    }
    return std::nullopt;
}

std::optional<GaussianInt> gaussian_consecutive(long base, const GaussianInt& diff, int len,
                                                long long norm_bound) {
    require_base(base);
    if (diff.is_zero()) throw std::invalid_argument("difference D must be nonzero");
    if (len < 1) throw std::invalid_argument("sequence length must be >= 1");
    HeightCache cache(base);
    std::optional<GaussianInt> found;
    for_each_norm_ordered_until(norm_bound, [&](std::int64_t re, std::int64_t im) {
        GaussianInt z(mpz_class(static_cast<long>(re)), mpz_class(static_cast<long>(im)));
        GaussianInt term = z;
        for (int j = 0; j < len; ++j) {
            if (!cache.height_of(term)) return false;
            term = term + diff;
        }
        found = std::move(z);
        return true;
    });
    return found;
}

std::vector<GaussianInt> related_differences(const GaussianInt& diff) {
    if (diff.is_zero()) throw std::invalid_argument("difference D must be nonzero");
    std::vector<GaussianInt> orbit = unit_orbit(diff);
    orbit.erase(std::remove(orbit.begin(), orbit.end(), diff), orbit.end());
    return orbit;
}

}  // namespace gausshappy
