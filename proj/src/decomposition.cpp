#include <tourney/decomposition.hpp>
#include <tourney/error.hpp>

#include <algorithm>
#include <bit>

namespace tourney {

namespace {
    void check_inside(const Tournament & t, VertexSet s)
    {
        if (! s.subset_of(t.vertices()))
            throw Error(Errc::out_of_range, "vertex set " + s.to_string() + " not inside 0.." + std::to_string(t.order() - 1));
    }

    /// Vertices of `within` - s that see s non-uniformly.
    std::uint64_t splitters(std::span<const std::uint64_t> out, std::uint64_t s, std::uint64_t within)
    {
        std::uint64_t result = 0;
        for (std::uint64_t rest = within & ~s; rest; rest &= rest - 1) {
            const int z = std::countr_zero(rest);
            const std::uint64_t m = out[z] & s;
            if (m != 0 && m != s)
                result |= std::uint64_t{1} << z;
        }
        return result;
    }

    std::uint64_t closure(std::span<const std::uint64_t> out, std::uint64_t s, std::uint64_t within)
    {
        while (const std::uint64_t grow = splitters(out, s, within))
            s |= grow;
        return s;
    }

    bool indecomposable_masks(std::span<const std::uint64_t> out, std::uint64_t within)
    {
        if (std::popcount(within) <= 2)
            return true;
        for (std::uint64_t xs = within; xs; xs &= xs - 1) {
            const std::uint64_t x = xs & -xs;
            for (std::uint64_t ys = xs & (xs - 1); ys; ys &= ys - 1) {
                const std::uint64_t y = ys & -ys;
                if (closure(out, x | y, within) != within)
                    return false;
            }
        }
        return true;
    }

    bool interval_masks(std::span<const std::uint64_t> out, std::uint64_t interval, std::uint64_t within)
    {
        return splitters(out, interval, within) == 0;
    }
}

bool IntervalSet::trivial_only() const
{
    return std::all_of(intervals.begin(), intervals.end(), [&](VertexSet s) { return s.size() <= 1 || s.size() == order; });
}

VertexSet ExteriorPartition::all_per_vertex() const
{
    VertexSet all;
    for (auto s : per_vertex)
        all |= s;
    return all;
}

bool is_interval(const Tournament & t, VertexSet interval)
{
    check_inside(t, interval);
    return interval_masks(t.out_masks(), interval.bits(), t.vertices().bits());
}

bool is_interval(const Tournament & t, VertexSet interval, VertexSet within)
{
    check_inside(t, within);
    if (! interval.subset_of(within))
        throw Error(Errc::out_of_range, "interval candidate " + interval.to_string() + " not inside " + within.to_string());
    return interval_masks(t.out_masks(), interval.bits(), within.bits());
}

VertexSet smallest_interval_containing(const Tournament & t, VertexSet seed)
{
    return smallest_interval_containing(t, seed, t.vertices());
}

VertexSet smallest_interval_containing(const Tournament & t, VertexSet seed, VertexSet within)
{
    check_inside(t, within);
    if (! seed.subset_of(within))
        throw Error(Errc::out_of_range, "seed " + seed.to_string() + " not inside " + within.to_string());
    if (seed.size() < 2)
        throw Error(Errc::seed_too_small, "seed needs at least two vertices, got " + seed.to_string());
    return VertexSet(closure(t.out_masks(), seed.bits(), within.bits()));
}

IntervalSet nontrivial_intervals(const Tournament & t, bool include_trivial)
{
    const int n = t.order();
    if (n > max_scan_order)
        throw Error(Errc::too_large, "interval scan is limited to " + std::to_string(max_scan_order) + " vertices");
    IntervalSet result;
    result.includes_trivial = include_trivial;
    result.order = n;
    const std::uint64_t all = t.vertices().bits();
    for (std::uint64_t s = 0; s <= all; ++s) {
        const int size = std::popcount(s);
        const bool trivial = size <= 1 || s == all;
        if (trivial && ! include_trivial)
            continue;
        if (trivial || interval_masks(t.out_masks(), s, all))
            result.intervals.emplace_back(s);
    }
    std::sort(result.intervals.begin(), result.intervals.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.bits() < b.bits();
    });
    return result;
}

bool is_indecomposable(const Tournament & t)
{
    return indecomposable_masks(t.out_masks(), t.vertices().bits());
}

bool is_indecomposable(const Tournament & t, VertexSet within)
{
    check_inside(t, within);
    return indecomposable_masks(t.out_masks(), within.bits());
}

bool is_indecomposable_by_scan(const Tournament & t)
{
    const int n = t.order();
    if (n > max_scan_order)
        throw Error(Errc::too_large, "interval scan is limited to " + std::to_string(max_scan_order) + " vertices");
    if (n <= 2)
        return true;
    const std::uint64_t all = t.vertices().bits();
    for (std::uint64_t s = 0; s < all; ++s)
        if (std::popcount(s) >= 2 && interval_masks(t.out_masks(), s, all))
            return false;
    return true;
}

bool is_critical(const Tournament & t)
{
    if (t.order() <= 1 || ! is_indecomposable(t))
        return false;
    const std::uint64_t all = t.vertices().bits();
    for (int x = 0; x < t.order(); ++x)
        if (indecomposable_masks(t.out_masks(), all & ~(std::uint64_t{1} << x)))
            return false;
    return true;
}

bool has_indecomposable_subtournament(const Tournament & t, int k)
{
    if (k < 0 || k > t.order())
        return false;
    const auto out = t.out_masks();
    return ! for_each_subset_of_size(t.vertices(), k, [&](VertexSet s) {
        return ! indecomposable_masks(out, s.bits());
    });
}

ExteriorPartition exterior_partition(const Tournament & t, VertexSet base)
{
    check_inside(t, base);
    if (base.size() < 3)
        throw Error(Errc::base_too_small, "base " + base.to_string() + " has fewer than 3 vertices");
    const auto out = t.out_masks();
    if (! indecomposable_masks(out, base.bits()))
        throw Error(Errc::base_decomposable, "T" + base.to_string() + " is decomposable");

    ExteriorPartition p;
    p.base = base;
    p.per_vertex.assign(t.order(), VertexSet{});
    for (int x : t.vertices() - base) {
        const VertexSet grown = base | VertexSet::single(x);
        if (indecomposable_masks(out, grown.bits()))
            p.ext.insert(x);
        const std::uint64_t beaten = out[x] & base.bits();
        if (beaten == 0 || beaten == base.bits())
            p.bracket.insert(x);
        for (int u : base)
            if (interval_masks(out, (VertexSet::single(u) | VertexSet::single(x)).bits(), grown.bits()))
                p.per_vertex[u].insert(x);
    }
    return p;
}

std::pair<int, int> extend_indecomposable_by_two(const Tournament & t, VertexSet base)
{
    check_inside(t, base);
    const VertexSet outside = t.vertices() - base;
    if (base.size() < 3 || outside.size() < 2)
        throw Error(Errc::precondition_violated, "need |X| >= 3 and |V - X| >= 2, got X = " + base.to_string());
    if (! is_indecomposable(t))
        throw Error(Errc::precondition_violated, to_code(t) + " is decomposable");
    if (! is_indecomposable(t, base))
        throw Error(Errc::precondition_violated, "T" + base.to_string() + " is decomposable");

    const auto out = t.out_masks();
    for (int x : outside)
        for (int y : outside) {
            if (y <= x)
                continue;
            const VertexSet grown = base | VertexSet::single(x) | VertexSet::single(y);
            if (indecomposable_masks(out, grown.bits()))
                return {x, y};
        }
    throw Error(Errc::internal_error, "no indecomposable two-vertex extension of " + base.to_string() + " in " + to_code(t));
}

int removable_vertex(const Tournament & t, int x)
{
    const int n = t.order();
    if (x < 0 || x >= n)
        throw Error(Errc::out_of_range, "vertex " + std::to_string(x) + " not in 0.." + std::to_string(n - 1));
    if (n < 6 || n % 2 != 0)
        throw Error(Errc::precondition_violated, "needs an even order >= 6, got " + std::to_string(n));
    if (! is_indecomposable(t))
        throw Error(Errc::precondition_violated, to_code(t) + " is decomposable");

    const auto out = t.out_masks();
    const std::uint64_t all = t.vertices().bits();
    for (int y = 0; y < n; ++y)
        if (y != x && indecomposable_masks(out, all & ~(std::uint64_t{1} << y)))
            return y;
    throw Error(Errc::internal_error, "no removable vertex other than " + std::to_string(x) + " in " + to_code(t));
}

}
