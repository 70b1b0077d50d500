#include <tourney/canonical.hpp>
#include <tourney/decomposition.hpp>
#include <tourney/enumerate.hpp>
#include <tourney/error.hpp>
#include <tourney/families.hpp>

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace tourney;

namespace {
    VertexSet set_of(std::initializer_list<int> vs)
    {
        VertexSet s;
        for (int v : vs)
            s.insert(v);
        return s;
    }

    Errc error_of(const std::function<void()> & f)
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.code();
        }
        return Errc::internal_error;
    }
}

TEST_CASE("is_interval")
{
    const auto t = circular(5);
    const auto minus0 = subtournament(t, set_of({1, 2, 3, 4}));
    CHECK(is_interval(t, set_of({2, 3}), set_of({1, 2, 3, 4})));
    CHECK(is_interval(minus0.tournament, set_of({1, 2})));
    for (int v = 0; v < 5; ++v)
        CHECK(is_interval(t, VertexSet::single(v)));
    CHECK(is_interval(t, VertexSet()));
    CHECK(is_interval(t, t.vertices()));
    CHECK_FALSE(is_interval(w_family(5), set_of({0, 1})));
}

TEST_CASE("smallest interval containing a seed")
{
    CHECK(smallest_interval_containing(circular(5), set_of({0, 1})) == VertexSet::range(5));
    CHECK(smallest_interval_containing(transitive(4), set_of({1, 2})) == set_of({1, 2}));
    CHECK(smallest_interval_containing(transitive(4), set_of({0, 2})) == set_of({0, 1, 2}));
    CHECK(smallest_interval_containing(circular(5), set_of({2, 3}), set_of({1, 2, 3, 4})) == set_of({2, 3}));
    CHECK(error_of([] { smallest_interval_containing(c3(), VertexSet::single(0)); }) == Errc::seed_too_small);

    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const auto t = oracle::random_tournament(n, rng);
        const int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        if (a == b)
            b = (b + 1) % n;
        const VertexSet seed = set_of({a, b});
        const VertexSet closure = smallest_interval_containing(t, seed);
        CHECK(oracle::is_interval(t, closure.bits()));
        // Every interval containing the seed contains the closure.
        for (auto i : oracle::nontrivial_intervals(t))
            if (seed.subset_of(VertexSet(i)))
                CHECK(closure.subset_of(VertexSet(i)));
    }
}

TEST_CASE("nontrivial intervals")
{
    CHECK(nontrivial_intervals(c3()).size() == 0);
    CHECK(nontrivial_intervals(c3()).trivial_only());

    const auto d = nontrivial_intervals(diamond(false));
    int threes = 0;
    for (VertexSet i : d.intervals)
        if (i.size() == 3) {
            ++threes;
            CHECK(i == set_of({0, 1, 2}));
        }
    CHECK(threes == 1);

    const auto tr = nontrivial_intervals(transitive(4));
    const std::vector<VertexSet> expected = {set_of({0, 1}), set_of({1, 2}), set_of({2, 3}), set_of({0, 1, 2}), set_of({1, 2, 3})};
    CHECK(tr.intervals == expected);
    CHECK(nontrivial_intervals(transitive(2)).size() == 0);
    CHECK(nontrivial_intervals(transitive(3)).size() == 2);

    const auto all = nontrivial_intervals(c3(), true);
    CHECK(all.includes_trivial);
    CHECK(all.size() == 5);
    CHECK(all.trivial_only());

    CHECK(error_of([] { nontrivial_intervals(circular(17)); }) == Errc::too_large);
}

TEST_CASE("interval scan agrees with the definition")
{
    std::mt19937_64 rng(31);
    for (int round = 0; round < 300; ++round) {
        const auto t = oracle::random_tournament(1 + static_cast<int>(rng() % 9), rng);
        auto mine = nontrivial_intervals(t).intervals;
        auto reference = oracle::nontrivial_intervals(t);
        std::vector<std::uint64_t> bits;
        for (VertexSet i : mine)
            bits.push_back(i.bits());
        std::sort(bits.begin(), bits.end());
        CHECK(bits == reference);
        // Ascending by size, then by mask.
        CHECK(std::is_sorted(mine.begin(), mine.end(), [](VertexSet a, VertexSet b) {
            return std::pair(a.size(), a.bits()) < std::pair(b.size(), b.bits());
        }));
    }
}

TEST_CASE("indecomposability")
{
    CHECK(is_indecomposable(circular(5)));
    CHECK(is_indecomposable(u_family(5)));
    CHECK(is_indecomposable(w_family(5)));
    CHECK(is_indecomposable(b6()));
    CHECK(is_indecomposable(c3()));
    CHECK_FALSE(is_indecomposable(transitive(3)));
    CHECK(is_indecomposable(transitive(1)));
    CHECK(is_indecomposable(transitive(2)));
    CHECK(is_indecomposable(transitive(0)));
    CHECK_FALSE(is_indecomposable(diamond(false)));
    for (const auto & t : all_tournaments(4))
        CHECK_FALSE(is_indecomposable(t));
    CHECK(is_indecomposable(circular(63)));
    CHECK_FALSE(is_indecomposable(transitive(64)));
}

TEST_CASE("pair closure agrees with the subset scan")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & t : all_tournaments(n)) {
            CHECK(is_indecomposable(t) == is_indecomposable_by_scan(t));
            CHECK(is_indecomposable(t) == oracle::indecomposable(t));
        }
    std::mt19937_64 rng(41);
    for (int round = 0; round < 1000; ++round) {
        const auto t = oracle::random_tournament(1 + static_cast<int>(rng() % 12), rng);
        CHECK(is_indecomposable(t) == is_indecomposable_by_scan(t));
    }
    // The within-form matches materialising the subtournament.
    for (int round = 0; round < 300; ++round) {
        const auto t = oracle::random_tournament(8, rng);
        const VertexSet x(rng() & 0xff);
        CHECK(is_indecomposable(t, x) == is_indecomposable(subtournament(t, x).tournament));
    }
}

TEST_CASE("criticality")
{
    for (int size : {5, 7, 9}) {
        CHECK(is_critical(circular(size)));
        CHECK(is_critical(u_family(size)));
        CHECK(is_critical(w_family(size)));
    }
    CHECK_FALSE(is_critical(b6()));
    CHECK_FALSE(is_critical(paley7()));
    CHECK_FALSE(is_critical(c3()));
    CHECK_FALSE(is_critical(transitive(1)));
    CHECK_FALSE(is_critical(transitive(5)));
    for (int n = 1; n <= 6; ++n)
        for (const auto & t : all_tournaments(n))
            CHECK(is_critical(t) == oracle::critical(t));
}

TEST_CASE("indecomposable subtournament of a given size")
{
    CHECK(has_indecomposable_subtournament(paley7(), 6));
    CHECK_FALSE(has_indecomposable_subtournament(w_family(7), 6));
    CHECK(has_indecomposable_subtournament(transitive(5), 2));
    CHECK_FALSE(has_indecomposable_subtournament(transitive(5), 3));
}

TEST_CASE("exterior partition")
{
    const auto p = exterior_partition(w_family(5), set_of({0, 1, 4}));
    CHECK(p.ext.empty());
    CHECK(p.bracket == set_of({2}));
    CHECK(p.part_of(1) == set_of({3}));
    CHECK(p.part_of(0).empty());
    CHECK(p.part_of(4).empty());

    const auto whole = exterior_partition(circular(5), VertexSet::range(5));
    CHECK(whole.ext.empty());
    CHECK(whole.bracket.empty());
    CHECK(whole.all_per_vertex().empty());

    CHECK(error_of([] { exterior_partition(circular(5), set_of({0, 1})); }) == Errc::base_too_small);
    CHECK(error_of([] { exterior_partition(transitive(5), set_of({0, 1, 2})); }) == Errc::base_decomposable);
    CHECK(error_of([] { exterior_partition(circular(5), set_of({0, 1, 7})); }) == Errc::out_of_range);
}

TEST_CASE("exterior partition matches a per-vertex classification")
{
    const auto t = circular(7);
    for_each_subset_of_size(t.vertices(), 5, [&](VertexSet x) {
        if (! is_indecomposable(t, x))
            return true;
        const auto p = exterior_partition(t, x);
        for (int v : t.vertices() - x) {
            const auto with = x | VertexSet::single(v);
            std::vector<int> members = with.to_vector();
            CHECK(p.ext.contains(v) == oracle::indecomposable(oracle::induced(t, members)));
            const bool beats_all = (t.out_neighbours(v) & x) == x, loses_all = (t.in_neighbours(v) & x) == x;
            CHECK(p.bracket.contains(v) == (beats_all || loses_all));
            for (int u : x) {
                // {u, v} is an interval of T(X + v).
                bool module = true;
                for (int z : x - VertexSet::single(u))
                    module = module && t.beats(z, u) == t.beats(z, v);
                CHECK(p.part_of(u).contains(v) == module);
            }
        }
        return true;
    });
}

TEST_CASE("extension by two vertices")
{
    const auto t7 = circular(7);
    VertexSet five;
    for_each_subset_of_size(t7.vertices(), 5, [&](VertexSet x) {
        five = x;
        return ! is_indecomposable(t7, x);
    });
    REQUIRE(are_isomorphic(subtournament(t7, five).tournament, circular(5)));
    const auto [x, y] = extend_indecomposable_by_two(t7, five);
    CHECK(x < y);
    CHECK_FALSE(five.contains(x));
    CHECK_FALSE(five.contains(y));
    CHECK(is_indecomposable(t7, five | VertexSet::single(x) | VertexSet::single(y)));

    const auto w9 = w_family(9);
    int cycles = 0;
    for_each_subset_of_size(w9.vertices(), 3, [&](VertexSet base) {
        if (! is_indecomposable(w9, base))
            return true;
        ++cycles;
        const auto [a, b] = extend_indecomposable_by_two(w9, base);
        CHECK(is_indecomposable(w9, base | VertexSet::single(a) | VertexSet::single(b)));
        return true;
    });
    CHECK(cycles > 0);

    CHECK(error_of([] { extend_indecomposable_by_two(transitive(6), set_of({0, 1, 2})); }) == Errc::precondition_violated);
    CHECK(error_of([] { extend_indecomposable_by_two(circular(5), set_of({0, 1, 2, 3})); }) == Errc::precondition_violated);
}

TEST_CASE("removable vertex")
{
    const int y = removable_vertex(b6(), 0);
    CHECK(y != 0);
    CHECK(is_indecomposable(remove_vertex(b6(), y)));
    for (int x = 0; x < 6; ++x) {
        const int r = removable_vertex(b6(), x);
        CHECK(r != x);
        CHECK(is_indecomposable(remove_vertex(b6(), r)));
    }
    CHECK(error_of([] { removable_vertex(transitive(6), 0); }) == Errc::precondition_violated);
    CHECK(error_of([] { removable_vertex(circular(7), 0); }) == Errc::precondition_violated);
}
