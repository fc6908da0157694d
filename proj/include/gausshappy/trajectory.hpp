#pragma once

#include <optional>
#include <vector>

#include "gausshappy/gaussian_int.hpp"

namespace gausshappy {

/// A periodic orbit of s_b, stored rotated so the anchor (minimal element
/// under (norm, re, im)) comes first. Length 1 means fixed point.
struct Cycle {
    long base = 10;
    std::vector<GaussianInt> elements;

    const GaussianInt& anchor() const { return elements.front(); }
    std::size_t length() const { return elements.size(); }

    friend bool operator==(const Cycle& x, const Cycle& y) {
        return x.base == y.base && x.elements == y.elements;
    }
};

/// Rotates a raw orbit so its (norm, re, im)-minimal element comes first.
Cycle make_cycle(long base, std::vector<GaussianInt> orbit);

/// Elementwise conjugate of a cycle, re-anchored.
Cycle conj_cycle(const Cycle& c);

enum class TerminalKind { Happy, Zero, InCycle };

/// Orbit record of one starting value: every iterate from start up to and
/// including the first element whose successor was already seen. The list
/// is duplicate-free; the terminal element appears exactly once.
struct Trajectory {
    long base = 10;
    GaussianInt start;
    std::vector<GaussianInt> steps;
    TerminalKind terminal = TerminalKind::Zero;
    std::optional<Cycle> cycle;  // present iff terminal == InCycle
};

/// Iterates s_b from z until reaching 1 (Happy), 0 (Zero), or a repeated
/// value (InCycle). Terminates for every input: outside the Theorem-5 region
/// iterates strictly shrink, and the region is finite.
Trajectory classify(const GaussianInt& z, long base);

bool is_happy(const GaussianInt& z, long base);

}  // namespace gausshappy
