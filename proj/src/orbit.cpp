#include "gausshappy/orbit.hpp"

#include <algorithm>

namespace gausshappy {

std::vector<GaussianInt> unit_orbit(const GaussianInt& z) {
    const GaussianInt zc = conj(z);
    std::vector<GaussianInt> out = {z, -z, mul_i(z), -mul_i(z), zc, -zc, mul_i(zc), -mul_i(zc)};
    std::sort(out.begin(), out.end(), ReImLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GaussianInt canonical_rep(const GaussianInt& z) {
    // unit_orbit is (re, im)-sorted, so the last element maximizes re then im.
    return unit_orbit(z).back();
}

}  // namespace gausshappy
