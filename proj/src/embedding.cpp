#include <tourney/decomposition.hpp>
#include <tourney/detail/canonicalizer.hpp>
#include <tourney/embedding.hpp>
#include <tourney/error.hpp>
#include <tourney/families.hpp>

#include <bit>

namespace tourney {

namespace {
    struct Search {
        std::span<const std::uint64_t> pattern;
        std::span<const std::uint64_t> host_out;
        std::vector<std::uint64_t> host_in;
        std::vector<std::uint64_t> allowed;
        std::vector<int> image;
        int k = 0;

        bool extend(int i, std::uint64_t used)
        {
            if (i == k)
                return true;
            std::uint64_t candidates = allowed[i] & ~used;
            for (int j = 0; j < i && candidates; ++j)
                candidates &= ((pattern[j] >> i) & 1) ? host_out[image[j]] : host_in[image[j]];
            for (; candidates; candidates &= candidates - 1) {
                const int h = std::countr_zero(candidates);
                image[i] = h;
                if (extend(i + 1, used | (std::uint64_t{1} << h)))
                    return true;
            }
            return false;
        }
    };

    std::vector<std::uint64_t> compress(std::span<const std::uint64_t> out, VertexSet s)
    {
        std::vector<std::uint64_t> result(s.size(), 0);
        int i = 0;
        for (int x : s) {
            int j = 0;
            for (int y : s) {
                if ((out[x] >> y) & 1)
                    result[i] |= std::uint64_t{1} << j;
                ++j;
            }
            ++i;
        }
        return result;
    }

    struct FivePatterns {
        Tournament t5 = circular(5), u5 = u_family(5), w5 = w_family(5);
    };

    const FivePatterns & five_patterns()
    {
        static const FivePatterns patterns;
        return patterns;
    }
}

VertexSet Embedding::vertices() const
{
    VertexSet s;
    for (int v : image)
        s.insert(v);
    return s;
}

std::optional<Embedding> find_embedding(const Tournament & pattern, const Tournament & host)
{
    const int k = pattern.order(), m = host.order();
    if (k > m)
        return std::nullopt;

    Search search;
    search.pattern = pattern.out_masks();
    search.host_out = host.out_masks();
    search.k = k;
    search.image.assign(k, -1);
    search.host_in.resize(m);
    for (int h = 0; h < m; ++h)
        search.host_in[h] = host.in_neighbours(h).bits();

    // A pattern vertex with score s and in-degree k-1-s can only land on a
    // host vertex with at least that many out- and in-neighbours.
    search.allowed.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        const int s = pattern.out_neighbours(i).size();
        for (int h = 0; h < m; ++h) {
            const int hs = host.out_neighbours(h).size();
            if (hs >= s && (m - 1 - hs) >= (k - 1 - s))
                search.allowed[i] |= std::uint64_t{1} << h;
        }
    }

    if (! search.extend(0, 0))
        return std::nullopt;
    return Embedding{std::move(search.image)};
}

bool embeds(const Tournament & pattern, const Tournament & host)
{
    return find_embedding(pattern, host).has_value();
}

bool contains_diamond(const Tournament & t)
{
    static const Tournament d4 = diamond(false), d4_dual = diamond(true);
    return embeds(d4, t) || embeds(d4_dual, t);
}

std::string I5Profile::to_string() const
{
    std::string s = "{";
    auto add = [&](bool flag, const char * name) {
        if (! flag)
            return;
        if (s.size() > 1)
            s += ',';
        s += name;
    };
    add(t5, "T5");
    add(u5, "U5");
    add(w5, "W5");
    return s + "}";
}

I5Profile i5_profile(const Tournament & t)
{
    const auto & p = five_patterns();
    return {embeds(p.t5, t), embeds(p.u5, t), embeds(p.w5, t)};
}

CanonicalCode IsoClassSet::insert(const Tournament & t)
{
    auto code = canonical_code(t);
    insert(code, t);
    return code;
}

void IsoClassSet::insert(const CanonicalCode & code, const Tournament & representative)
{
    auto [it, fresh] = classes_.try_emplace(code, Entry{representative, 0});
    ++it->second.multiplicity;
}

std::vector<CanonicalCode> IsoClassSet::codes() const
{
    std::vector<CanonicalCode> result;
    result.reserve(classes_.size());
    for (const auto & [code, entry] : classes_)
        result.push_back(code);
    return result;
}

IsoClassSet indecomposable_subtournaments(const Tournament & t, int k)
{
    if (k < 3 || k > t.order())
        throw Error(Errc::bad_k, "k = " + std::to_string(k) + " outside 3.." + std::to_string(t.order()));
    IsoClassSet classes;
    detail::Canonicalizer canon;
    const auto out = t.out_masks();
    for_each_subset_of_size(t.vertices(), k, [&](VertexSet s) {
        if (! is_indecomposable(t, s))
            return true;
        auto masks = compress(out, s);
        canon.run(masks);
        CanonicalCode code(k, {canon.rows().begin(), canon.rows().end()});
        classes.insert(code, Tournament::from_masks_unchecked(std::move(masks)));
        return true;
    });
    return classes;
}

bool criticality_by_seven(const Tournament & t)
{
    if (t.order() < 7)
        throw Error(Errc::precondition_violated, "needs at least 7 vertices, got " + std::to_string(t.order()));
    if (! is_indecomposable(t))
        throw Error(Errc::precondition_violated, to_code(t) + " is decomposable");
    static const CanonicalCode t7 = canonical_code(circular(7)), u7 = canonical_code(u_family(7)),
                               w7 = canonical_code(w_family(7));
    const auto classes = indecomposable_subtournaments(t, 7);
    if (classes.size() != 1)
        return false;
    const auto & only = classes.begin()->first;
    return only == t7 || only == u7 || only == w7;
}

}
