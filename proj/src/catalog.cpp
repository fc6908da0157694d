#include "gausshappy/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "gausshappy/digits.hpp"
#include "gausshappy/errors.hpp"

namespace gausshappy {

namespace {

// Grid cell budget: the largest supported square is ~1.5e8 points (~0.6 GB
// of terminal ids). Larger bases must go through explicit smaller bounds.
constexpr long long kMaxGridCells = 150'000'000;

struct SmallZ {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend bool operator==(const SmallZ&, const SmallZ&) = default;
};

// (norm, re, im) order on path-sized values; norms fit __int128.
bool small_norm_less(const SmallZ& x, const SmallZ& y) {
    const __int128 nx = static_cast<__int128>(x.re) * x.re + static_cast<__int128>(x.im) * x.im;
    const __int128 ny = static_cast<__int128>(y.re) * y.re + static_cast<__int128>(y.im) * y.im;
    if (nx != ny) return nx < ny;
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
}

struct SmallCycleLess {
    bool operator()(const std::vector<SmallZ>& a, const std::vector<SmallZ>& b) const {
        return small_norm_less(a.front(), b.front());
    }
};

// Shared registry of discovered cycles, keyed by anchor so that concurrent
// rediscovery of the same cycle yields the same id.
class CycleRegistry {
  public:
    std::int32_t intern(std::vector<SmallZ> orbit) {
        auto anchor_it = std::min_element(orbit.begin(), orbit.end(), small_norm_less);
        std::rotate(orbit.begin(), anchor_it, orbit.end());
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = ids_.emplace(orbit.front(), static_cast<std::int32_t>(cycles_.size()));
        if (inserted) cycles_.push_back(std::move(orbit));
        return it->second;
    }

    std::vector<std::vector<SmallZ>> take() { return std::move(cycles_); }

  private:
    struct AnchorLess {
        bool operator()(const SmallZ& x, const SmallZ& y) const { return small_norm_less(x, y); }
    };
    std::mutex mu_;
    std::map<SmallZ, std::int32_t, AnchorLess> ids_;
    std::vector<std::vector<SmallZ>> cycles_;
};

}  // namespace

long long region_bound(long base) {
    require_base(base);
    long long bound = 1;
    const int exp = base <= 6 ? 4 : 3;
    for (int i = 0; i < exp; ++i) {
        if (bound > (1ll << 62) / base) {
            throw CapacityError("region bound overflows for base " + std::to_string(base));
        }
        bound *= base;
    }
    return bound;
}

int CycleCatalog::find_anchor(const GaussianInt& anchor) const {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].anchor() == anchor) return static_cast<int>(i);
    }
    return -1;
}

std::int32_t CatalogScan::terminal_at(long long re, long long im) const {
    const long long bound = catalog.bound;
    if (std::abs(re) >= bound || std::abs(im) >= bound) {
        throw std::out_of_range("terminal_at: point outside the scanned square");
    }
    const long long w = 2 * bound - 1;
    return terminal[static_cast<std::size_t>((re + bound - 1) * w + (im + bound - 1))];
}

CatalogScan scan_region(long base, long long bound, int workers) {
    require_base(base);
    if (bound < 1) throw std::invalid_argument("scan bound must be >= 1");
    const long long width = 2 * bound - 1;
    if (width > kMaxGridCells / width) {
        throw CapacityError("scan grid for base " + std::to_string(base) + " bound " +
                            std::to_string(bound) + " exceeds the cell budget");
    }
    const std::size_t cells = static_cast<std::size_t>(width * width);

    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1) workers = 1;
    }
    workers = static_cast<int>(std::min<long long>(workers, width));

    // -1 = unresolved. Stores are idempotent: every writer derives the same
    // anchor-keyed id for a given point, so relaxed atomics suffice.
    std::unique_ptr<std::atomic<std::int32_t>[]> memo(new std::atomic<std::int32_t>[cells]);
    for (std::size_t i = 0; i < cells; ++i) memo[i].store(-1, std::memory_order_relaxed);

    CycleRegistry registry;

    auto cell_index = [bound, width](std::int64_t re, std::int64_t im) -> std::int64_t {
        if (re <= -bound || re >= bound || im <= -bound || im >= bound) return -1;
        return (re + bound - 1) * width + (im + bound - 1);
    };

    auto run_rows = [&](long long row_begin, long long row_end) {
        std::vector<SmallZ> path;
        for (long long a = row_begin; a < row_end; ++a) {
            const std::int64_t re0 = a - (bound - 1);
            for (std::int64_t im0 = -(bound - 1); im0 <= bound - 1; ++im0) {
                const std::int64_t start_idx = cell_index(re0, im0);
                if (memo[start_idx].load(std::memory_order_relaxed) >= 0) continue;
                path.clear();
                SmallZ cur{re0, im0};
                std::int32_t term = -1;
                while (true) {
                    const std::int64_t idx = cell_index(cur.re, cur.im);
                    if (idx >= 0) {
                        const std::int32_t known = memo[idx].load(std::memory_order_relaxed);
                        if (known >= 0) {
                            term = known;
                            break;
                        }
                    }
                    auto hit = std::find(path.begin(), path.end(), cur);
                    if (hit != path.end()) {
                        term = registry.intern(std::vector<SmallZ>(hit, path.end()));
                        break;
                    }
                    path.push_back(cur);
                    std::int64_t nre, nim;
                    detail::s_b_small(cur.re, cur.im, base, nre, nim);
                    cur = SmallZ{nre, nim};
                }
                for (const SmallZ& p : path) {
                    const std::int64_t idx = cell_index(p.re, p.im);
                    if (idx >= 0) memo[idx].store(term, std::memory_order_relaxed);
                }
            }
        }
    };

    if (workers == 1) {
        run_rows(0, width);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (width + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long long lo = w * chunk;
            const long long hi = std::min<long long>(width, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_rows, lo, hi);
        }
        for (std::thread& t : pool) t.join();
    }

    // Registry ids follow discovery order; renumber by anchor so the final
    // catalog and grid are schedule-independent.
    std::vector<std::vector<SmallZ>> raw = registry.take();
    std::vector<std::int32_t> order(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) order[i] = static_cast<std::int32_t>(i);
    std::sort(order.begin(), order.end(), [&raw](std::int32_t x, std::int32_t y) {
        return small_norm_less(raw[x].front(), raw[y].front());
    });
    std::vector<std::int32_t> remap(raw.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        remap[static_cast<std::size_t>(order[rank])] = static_cast<std::int32_t>(rank);
    }

    CatalogScan out;
    out.catalog.base = base;
    out.catalog.bound = bound;
    out.catalog.cycles.reserve(raw.size());
    for (std::int32_t id : order) {
        std::vector<GaussianInt> elems;
        elems.reserve(raw[static_cast<std::size_t>(id)].size());
        for (const SmallZ& z : raw[static_cast<std::size_t>(id)]) {
            elems.emplace_back(mpz_class(static_cast<long>(z.re)), mpz_class(static_cast<long>(z.im)));
        }
        out.catalog.cycles.push_back(Cycle{base, std::move(elems)});
    }

    out.terminal.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        const std::int32_t id = memo[i].load(std::memory_order_relaxed);
        if (id < 0) throw std::logic_error("scan_region: unresolved grid cell");
        out.terminal[i] = remap[static_cast<std::size_t>(id)];
    }

    // Conjugation classes. Lemma 1.2 forces the elementwise conjugate of
    // every cycle to be present; a miss is an internal invariant violation.
    std::vector<int> partner(out.catalog.cycles.size(), -1);
    for (std::size_t i = 0; i < out.catalog.cycles.size(); ++i) {
        const int j = out.catalog.find_anchor(conj_cycle(out.catalog.cycles[i]).anchor());
        if (j < 0) throw std::logic_error("scan_region: catalog not closed under conjugation");
        partner[i] = j;
    }
    for (std::size_t i = 0; i < out.catalog.cycles.size(); ++i) {
        const int j = partner[i];
        if (j == static_cast<int>(i)) {
            out.catalog.classes.push_back({static_cast<int>(i)});
        } else if (static_cast<int>(i) < j) {
            out.catalog.classes.push_back({static_cast<int>(i), j});
        }
    }
    return out;
}

CycleCatalog enumerate_catalog(long base, int workers) {
    return scan_region(base, region_bound(base), workers).catalog;
}

std::pair<GaussianInt, GaussianInt> odd_base_fixed_points(long base) {
    if (base < 3 || base % 2 == 0) {
        throw std::invalid_argument("odd_base_fixed_points requires an odd base >= 3");
    }
    const mpz_class b(base);
    return {GaussianInt((b * b + 1) / 2, 0), GaussianInt((b + 1) * (b + 1) / 2, 0)};
}

}  // namespace gausshappy
