#include <tourney/decomposition.hpp>
#include <tourney/detail/canonicalizer.hpp>
#include <tourney/detail/parallel.hpp>
#include <tourney/enumerate.hpp>
#include <tourney/error.hpp>

#include <algorithm>

namespace tourney {

namespace {
    void check_order(int n, const EnumerateOptions & options)
    {
        if (n < 1 || n > max_enumeration_order)
            throw Error(Errc::bad_n, "enumeration order " + std::to_string(n) + " outside 1.." + std::to_string(max_enumeration_order));
        if (n > default_enumeration_order && ! options.allow_big)
            throw Error(Errc::bad_n, "enumeration order " + std::to_string(n) + " needs allow_big");
    }

    std::vector<std::uint64_t> augment(int n, const std::vector<std::uint64_t> & parents, int jobs)
    {
        const int m = n - 1;
        const std::uint64_t patterns = std::uint64_t{1} << m;
        std::vector<std::vector<std::uint64_t>> children(parents.size());

        struct Scratch {
            detail::Canonicalizer canon;
            std::vector<std::uint64_t> out;
        };
        const int workers = detail::resolve_jobs(jobs);
        std::vector<Scratch> scratch(workers);

        detail::parallel_for(parents.size(), workers, [&](std::size_t index, int worker) {
            auto & [canon, out] = scratch[worker];
            const auto parent = detail::masks_from_rows(m, detail::unpack_rows(m, parents[index]));
            out.assign(n, 0);
            auto & kept = children[index];
            const std::uint64_t newbit = std::uint64_t{1} << m;
            for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
                // pattern bit i set: i -> new vertex.
                for (int i = 0; i < m; ++i)
                    out[i] = parent[i] | (((pattern >> i) & 1) ? newbit : 0);
                out[m] = ~pattern & (patterns - 1);
                canon.run(out);
                if (canon.last_orbit() & newbit)
                    kept.push_back(canon.packed());
            }
            std::sort(kept.begin(), kept.end());
            kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        });

        std::size_t total = 0;
        for (const auto & c : children)
            total += c.size();
        std::vector<std::uint64_t> layer;
        layer.reserve(total);
        for (auto & c : children) {
            layer.insert(layer.end(), c.begin(), c.end());
            std::vector<std::uint64_t>().swap(c);
        }
        std::sort(layer.begin(), layer.end());
        return layer;
    }
}

std::string_view to_string(Filter f) noexcept
{
    switch (f) {
    case Filter::all: return "all";
    case Filter::indecomposable: return "indecomposable";
    case Filter::critical: return "critical";
    }
    return "?";
}

bool passes(const Tournament & t, Filter f)
{
    switch (f) {
    case Filter::all: return true;
    case Filter::indecomposable: return is_indecomposable(t);
    case Filter::critical: return is_critical(t);
    }
    return false;
}

std::vector<std::uint64_t> canonical_keys(int n, const EnumerateOptions & options)
{
    check_order(n, options);
    std::vector<std::uint64_t> layer{0};
    for (int k = 2; k <= n; ++k)
        layer = augment(k, layer, options.jobs);
    return layer;
}

Tournament from_key(int n, std::uint64_t key)
{
    return Tournament::from_masks_unchecked(detail::masks_from_rows(n, detail::unpack_rows(n, key)));
}

EnumerationCursor::EnumerationCursor(int n, Filter filter, const EnumerateOptions & options) :
    n_(n),
    filter_(filter),
    keys_(canonical_keys(n, options))
{
}

std::optional<Tournament> EnumerationCursor::next()
{
    while (position_ < keys_.size()) {
        auto t = from_key(n_, keys_[position_++]);
        if (passes(t, filter_))
            return t;
    }
    return std::nullopt;
}

namespace {
    std::vector<Tournament> collect(int n, Filter filter, const EnumerateOptions & options)
    {
        std::vector<Tournament> result;
        EnumerationCursor cursor(n, filter, options);
        while (auto t = cursor.next())
            result.push_back(std::move(*t));
        return result;
    }
}

std::vector<Tournament> all_tournaments(int n, const EnumerateOptions & options)
{
    return collect(n, Filter::all, options);
}

std::vector<Tournament> indecomposable_tournaments(int n, const EnumerateOptions & options)
{
    return collect(n, Filter::indecomposable, options);
}

std::vector<Tournament> critical_tournaments(int n, const EnumerateOptions & options)
{
    return collect(n, Filter::critical, options);
}

std::size_t count_tournaments(int n, Filter filter, const EnumerateOptions & options)
{
    if (filter == Filter::all)
        return canonical_keys(n, options).size();
    std::size_t count = 0;
    EnumerationCursor cursor(n, filter, options);
    while (cursor.next())
        ++count;
    return count;
}

}
