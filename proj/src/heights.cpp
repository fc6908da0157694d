#include "gausshappy/heights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "gausshappy/digits.hpp"
#include "gausshappy/errors.hpp"
#include "gausshappy/orbit.hpp"
#include "gausshappy/trajectory.hpp"

namespace gausshappy {

namespace {

// ~pi * limit lattice points get buffered and sorted; cap the transient.
constexpr long long kMaxScanPoints = 40'000'000;

long long isqrt_ll(long long n) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

struct Point {
    std::int32_t re;
    std::int32_t im;
};

std::vector<Point> sorted_points(long long norm_limit) {
    if (norm_limit < 0) throw std::invalid_argument("norm limit must be >= 0");
    const long long r = isqrt_ll(norm_limit);
    std::vector<Point> pts;
    for (long long a = -r; a <= r; ++a) {
        const long long rem = norm_limit - a * a;
        const long long s = isqrt_ll(rem);
        for (long long b = -s; b <= s; ++b) {
            if (static_cast<long long>(pts.size()) >= kMaxScanPoints) {
                throw CapacityError("norm-ordered scan exceeds the point budget at limit " +
                                    std::to_string(norm_limit));
            }
            pts.push_back(Point{static_cast<std::int32_t>(a), static_cast<std::int32_t>(b)});
        }
    }
    std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) {
        const long long nx = static_cast<long long>(x.re) * x.re + static_cast<long long>(x.im) * x.im;
        const long long ny = static_cast<long long>(y.re) * y.re + static_cast<long long>(y.im) * y.im;
        if (nx != ny) return nx < ny;
        if (x.re != y.re) return x.re < y.re;
        return x.im < y.im;
    });
    return pts;
}

std::vector<OrbitClassGroup> group_by_orbit(std::vector<GaussianInt> members) {
    std::map<GaussianInt, std::vector<GaussianInt>, ReImLess> buckets;
    for (GaussianInt& z : members) buckets[canonical_rep(z)].push_back(std::move(z));
    std::vector<OrbitClassGroup> out;
    for (auto& [rep, group] : buckets) {
        (void)rep;
        std::sort(group.begin(), group.end(), ReImLess{});
        out.push_back(OrbitClassGroup{group.back(), std::move(group)});
    }
    std::sort(out.begin(), out.end(), [](const OrbitClassGroup& x, const OrbitClassGroup& y) {
        return ReImLess{}(x.members.front(), y.members.front());
    });
    return out;
}

// Theorem-9 heights: {1}, {-1}, {i, -i}, all of norm 1, for every base.
SmallestOfHeight low_height_entry(long base, int h) {
    SmallestOfHeight entry;
    entry.base = base;
    entry.height = h;
    entry.norm = 1;
    switch (h) {
        case 0:
            entry.classes = {OrbitClassGroup{GaussianInt(1), {GaussianInt(1)}}};
            break;
        case 1:
            entry.classes = {OrbitClassGroup{GaussianInt(-1), {GaussianInt(-1)}}};
            break;
        default:
            entry.classes = {OrbitClassGroup{GaussianInt(0, 1), {GaussianInt(0, -1), GaussianInt(0, 1)}}};
            break;
    }
    return entry;
}

}  // namespace

std::optional<int> height(const GaussianInt& z, long base) {
    const Trajectory t = classify(z, base);
    if (t.terminal != TerminalKind::Happy) return std::nullopt;
    return static_cast<int>(t.steps.size()) - 1;
}

HeightCache::HeightCache(long base) : base_(base) {
    require_base(base);
    memo_.emplace(GaussianInt(1), 0);
    memo_.emplace(GaussianInt(0), -1);
}

std::optional<int> HeightCache::height_of(const GaussianInt& z) {
    std::vector<GaussianInt> path;
    GaussianInt cur = z;
    int terminal_height = -1;
    while (true) {
        auto it = memo_.find(cur);
        if (it != memo_.end()) {
            terminal_height = it->second;
            break;
        }
        if (std::find(path.begin(), path.end(), cur) != path.end()) {
            terminal_height = -1;  // closed a new cycle; nothing on it is happy
            break;
        }
        path.push_back(cur);
        cur = s_b(cur, base_);
    }
    for (std::size_t i = path.size(); i-- > 0;) {
        if (terminal_height >= 0) {
            memo_.emplace(path[i], terminal_height + static_cast<int>(path.size() - i));
        } else {
            memo_.emplace(path[i], -1);
        }
    }
    const int h = memo_.at(z);
    if (h < 0) return std::nullopt;
    return h;
}

std::vector<GaussianInt> norm_ordered_stream(long long norm_limit) {
    std::vector<GaussianInt> out;
    for (const Point& p : sorted_points(norm_limit)) {
        out.emplace_back(mpz_class(static_cast<long>(p.re)), mpz_class(static_cast<long>(p.im)));
    }
    return out;
}

void for_each_norm_ordered(long long norm_limit,
                           const std::function<void(std::int64_t, std::int64_t)>& fn) {
    for (const Point& p : sorted_points(norm_limit)) fn(p.re, p.im);
}

void for_each_norm_ordered_until(long long norm_limit,
                                 const std::function<bool(std::int64_t, std::int64_t)>& fn) {
    for (const Point& p : sorted_points(norm_limit)) {
        if (fn(p.re, p.im)) return;
    }
}

std::vector<std::optional<SmallestOfHeight>> smallest_heights_table(long base, int max_h,
                                                                    long long limit,
                                                                    ScanDomain domain) {
    require_base(base);
    if (max_h < 0) throw std::invalid_argument("max height must be >= 0");
    std::vector<std::optional<SmallestOfHeight>> out(static_cast<std::size_t>(max_h) + 1);

    HeightCache cache(base);
    int remaining = 0;
    std::vector<char> pending(static_cast<std::size_t>(max_h) + 1, 0);
    for (int h = 0; h <= max_h; ++h) {
        if (domain == ScanDomain::Gaussian && h <= 2) {
            if (limit >= 1) out[static_cast<std::size_t>(h)] = low_height_entry(base, h);
            continue;
        }
        pending[static_cast<std::size_t>(h)] = 1;
        ++remaining;
    }
    if (remaining == 0) return out;

    if (domain == ScanDomain::RationalPositive) {
        for (long long v = 1; v <= limit && remaining > 0; ++v) {
            const GaussianInt z(mpz_class(static_cast<long>(v)), 0);
            const auto h = cache.height_of(z);
            if (!h || *h > max_h || !pending[static_cast<std::size_t>(*h)]) continue;
            SmallestOfHeight entry;
            entry.base = base;
            entry.height = *h;
            entry.norm = mpz_class(static_cast<long>(v)) * v;
            entry.classes = {OrbitClassGroup{z, {z}}};
            out[static_cast<std::size_t>(*h)] = std::move(entry);
            pending[static_cast<std::size_t>(*h)] = 0;
            --remaining;
        }
        return out;
    }

    // Shared Gaussian scan: finalize each pending height at the end of the
    // first norm shell containing a hit.
    const std::vector<Point> pts = sorted_points(limit);
    std::vector<std::vector<GaussianInt>> hits(static_cast<std::size_t>(max_h) + 1);
    std::size_t i = 0;
    while (i < pts.size() && remaining > 0) {
        const long long shell_norm = static_cast<long long>(pts[i].re) * pts[i].re +
                                     static_cast<long long>(pts[i].im) * pts[i].im;
        std::size_t j = i;
        for (; j < pts.size(); ++j) {
            const long long n = static_cast<long long>(pts[j].re) * pts[j].re +
                                static_cast<long long>(pts[j].im) * pts[j].im;
            if (n != shell_norm) break;
            const GaussianInt z(mpz_class(static_cast<long>(pts[j].re)),
                                mpz_class(static_cast<long>(pts[j].im)));
            const auto h = cache.height_of(z);
            if (h && *h <= max_h && pending[static_cast<std::size_t>(*h)]) {
                hits[static_cast<std::size_t>(*h)].push_back(z);
            }
        }
        for (int h = 0; h <= max_h; ++h) {
            auto& found = hits[static_cast<std::size_t>(h)];
            if (found.empty()) continue;
            SmallestOfHeight entry;
            entry.base = base;
            entry.height = h;
            entry.norm = shell_norm;
            entry.classes = group_by_orbit(std::move(found));
            out[static_cast<std::size_t>(h)] = std::move(entry);
            found.clear();
            pending[static_cast<std::size_t>(h)] = 0;
            --remaining;
        }
        i = j;
    }
    return out;
}

std::optional<SmallestOfHeight> smallest_of_height(long base, int h, long long limit,
                                                   ScanDomain domain) {
    if (h < 0) throw std::invalid_argument("height must be >= 0");
    auto table = smallest_heights_table(base, h, limit, domain);
    return table[static_cast<std::size_t>(h)];
}

std::vector<GaussianInt> SmallestOfHeight::all_members() const {
    std::vector<GaussianInt> out;
    for (const OrbitClassGroup& g : classes) {
        out.insert(out.end(), g.members.begin(), g.members.end());
    }
    std::sort(out.begin(), out.end(), ReImLess{});
    return out;
}

}  // namespace gausshappy
