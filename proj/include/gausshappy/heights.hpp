#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gausshappy/gaussian_int.hpp"

namespace gausshappy {

/// Minimal k >= 0 with s_b^k(z) = 1, or nullopt when z is not happy.
std::optional<int> height(const GaussianInt& z, long base);

/// Memoizing height evaluator for scans; every point's height is computed
/// once per cache instance.
class HeightCache {
  public:
    explicit HeightCache(long base);

    /// Height of z, or nullopt when z is not happy.
    std::optional<int> height_of(const GaussianInt& z);

    long base() const { return base_; }

  private:
    long base_;
    std::unordered_map<GaussianInt, int, GaussianIntHash> memo_;  // -1 = not happy
};

/// Every z with norm(z) <= norm_limit, sorted by (norm, re, im) ascending.
std::vector<GaussianInt> norm_ordered_stream(long long norm_limit);

/// Streams the same sequence as norm_ordered_stream through a callback
/// without materializing GaussianInt values.
void for_each_norm_ordered(long long norm_limit,
                           const std::function<void(std::int64_t, std::int64_t)>& fn);

/// As for_each_norm_ordered, but stops early once fn returns true.
void for_each_norm_ordered_until(long long norm_limit,
                                 const std::function<bool(std::int64_t, std::int64_t)>& fn);

/// One unit-orbit's worth of values attaining a height at the minimal norm.
/// members holds only the attaining values (heights 0-2 have partial orbits);
/// rep is the (re, im)-maximal member, which for a full orbit is exactly
/// canonical_rep.
struct OrbitClassGroup {
    GaussianInt rep;
    std::vector<GaussianInt> members;  // (re, im)-sorted
};

struct SmallestOfHeight {
    long base = 10;
    int height = 0;
    mpz_class norm;
    std::vector<OrbitClassGroup> classes;

    /// Union of all class members, (re, im)-sorted.
    std::vector<GaussianInt> all_members() const;
};

enum class ScanDomain {
    Gaussian,          // limit bounds the norm
    RationalPositive,  // scan 1..limit by value
};

/// First norm (or value, in rational mode) at which some z has the given
/// height, with every attaining z of that norm grouped into unit-orbit
/// classes. Returns nullopt when the scan bound is reached, never as a claim
/// that no such number exists.
std::optional<SmallestOfHeight> smallest_of_height(long base, int h, long long limit,
                                                   ScanDomain domain = ScanDomain::Gaussian);

/// One entry per height 0..max_h, sharing a single scan.
std::vector<std::optional<SmallestOfHeight>> smallest_heights_table(
    long base, int max_h, long long limit, ScanDomain domain = ScanDomain::Gaussian);

}  // namespace gausshappy
