#include "gausshappy/trajectory.hpp"

#include <algorithm>
#include <unordered_map>

#include "gausshappy/digits.hpp"
#include "gausshappy/errors.hpp"

namespace gausshappy {

Cycle make_cycle(long base, std::vector<GaussianInt> orbit) {
    auto anchor = std::min_element(orbit.begin(), orbit.end(), NormReImLess{});
    std::rotate(orbit.begin(), anchor, orbit.end());
    return Cycle{base, std::move(orbit)};
}

Cycle conj_cycle(const Cycle& c) {
    std::vector<GaussianInt> elems;
    elems.reserve(c.elements.size());
    for (const GaussianInt& z : c.elements) elems.push_back(conj(z));
    return make_cycle(c.base, std::move(elems));
}

Trajectory classify(const GaussianInt& z, long base) {
    require_base(base);
    Trajectory t;
    t.base = base;
    t.start = z;
    std::unordered_map<GaussianInt, std::size_t, GaussianIntHash> seen;
    GaussianInt cur = z;
    while (true) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            const GaussianInt& last = t.steps.back();
            if (last == GaussianInt(1)) {
                t.terminal = TerminalKind::Happy;
            } else if (last == GaussianInt(0)) {
                t.terminal = TerminalKind::Zero;
            } else {
                t.terminal = TerminalKind::InCycle;
                t.cycle = make_cycle(
                    base, std::vector<GaussianInt>(t.steps.begin() + static_cast<long>(it->second),
                                                   t.steps.end()));
            }
            return t;
        }
        seen.emplace(cur, t.steps.size());
        t.steps.push_back(cur);
        cur = s_b(cur, base);
    }
}

bool is_happy(const GaussianInt& z, long base) {
    return classify(z, base).terminal == TerminalKind::Happy;
}

}  // namespace gausshappy
