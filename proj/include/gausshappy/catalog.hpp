#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gausshappy/trajectory.hpp"

namespace gausshappy {

/// Search-region half-width from the contraction theorem: B^4 for
/// 2 <= B <= 6, B^3 for B >= 7. Every cycle of s_b contains a point with
/// |re| and |im| strictly below this bound.
long long region_bound(long base);

/// Complete fixed-point/cycle inventory for one base. Cycles are sorted by
/// anchor under (norm, re, im); classes group each cycle with its elementwise
/// conjugate (self-conjugate cycles form singleton classes).
struct CycleCatalog {
    long base = 10;
    long long bound = 0;
    std::vector<Cycle> cycles;
    std::vector<std::vector<int>> classes;

    /// Index of the cycle with the given anchor, or -1.
    int find_anchor(const GaussianInt& anchor) const;
};

/// Full scan result: the catalog plus the per-point terminal over the square
/// |re|, |im| < bound (row-major over re, then im; value indexes
/// catalog.cycles).
struct CatalogScan {
    CycleCatalog catalog;
    std::vector<std::int32_t> terminal;

    std::int32_t terminal_at(long long re, long long im) const;
};

/// Classifies every grid point |re|, |im| < bound with memoization and
/// returns all distinct cycles. Deterministic: the result is independent of
/// traversal order and of the number of workers (0 = use all cores).
CatalogScan scan_region(long base, long long bound, int workers = 0);

/// scan_region over the full Corollary-6 square, catalog only.
CycleCatalog enumerate_catalog(long base, int workers = 0);

/// The two rational fixed points (B^2+1)/2 and (B+1)^2/2 of every odd base.
std::pair<GaussianInt, GaussianInt> odd_base_fixed_points(long base);

}  // namespace gausshappy
