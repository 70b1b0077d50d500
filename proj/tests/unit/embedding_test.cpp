#include <tourney/canonical.hpp>
#include <tourney/decomposition.hpp>
#include <tourney/embedding.hpp>
#include <tourney/enumerate.hpp>
#include <tourney/error.hpp>
#include <tourney/families.hpp>

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace tourney;

namespace {
    void check_witness(const Tournament & pattern, const Tournament & host, const Embedding & e)
    {
        REQUIRE(e.image.size() == static_cast<std::size_t>(pattern.order()));
        CHECK(e.vertices().size() == pattern.order());
        for (int a = 0; a < pattern.order(); ++a)
            for (int b = 0; b < pattern.order(); ++b)
                if (a != b)
                    CHECK(host.beats(e.image[a], e.image[b]) == pattern.beats(a, b));
    }
}

TEST_CASE("embeds")
{
    CHECK(embeds(circular(5), circular(7)));
    CHECK_FALSE(embeds(w_family(5), paley7()));
    CHECK_FALSE(embeds(diamond(false), circular(9)));
    CHECK_FALSE(embeds(diamond(true), circular(9)));
    CHECK(embeds(diamond(false), diamond(false)));
    CHECK(embeds(transitive(0), c3()));
    CHECK_FALSE(embeds(transitive(4), c3()));
    CHECK(embeds(c3(), circular(5)));

    const auto e = find_embedding(w_family(5), w_family(9));
    REQUIRE(e.has_value());
    check_witness(w_family(5), w_family(9), *e);
}

TEST_CASE("embeds agrees with brute force on every host up to six vertices")
{
    std::vector<Tournament> patterns;
    for (int k = 1; k <= 4; ++k)
        for (const auto & p : all_tournaments(k))
            patterns.push_back(p);
    patterns.push_back(circular(5));
    patterns.push_back(u_family(5));
    patterns.push_back(w_family(5));
    for (int n = 1; n <= 6; ++n)
        for (const auto & host : all_tournaments(n))
            for (const auto & p : patterns) {
                const auto e = find_embedding(p, host);
                REQUIRE(e.has_value() == oracle::embeds(p, host));
                if (e)
                    check_witness(p, host, *e);
            }
}

TEST_CASE("embeds on random larger hosts")
{
    std::mt19937_64 rng(51);
    for (int round = 0; round < 100; ++round) {
        const auto host = oracle::random_tournament(7 + static_cast<int>(rng() % 2), rng);
        const auto pattern = oracle::random_tournament(4 + static_cast<int>(rng() % 2), rng);
        CHECK(embeds(pattern, host) == oracle::embeds(pattern, host));
    }
}

TEST_CASE("diamonds")
{
    for (int size : {5, 7, 9})
        CHECK_FALSE(contains_diamond(circular(size)));
    CHECK(contains_diamond(w_family(5)));
    CHECK(contains_diamond(diamond(false)));
    CHECK(contains_diamond(diamond(true)));
    CHECK_FALSE(contains_diamond(transitive(8)));
}

TEST_CASE("five-vertex profiles")
{
    CHECK(i5_profile(circular(9)) == I5Profile{true, false, false});
    CHECK(i5_profile(paley7()) == I5Profile{false, true, false});
    CHECK(i5_profile(f_family(8)) == I5Profile{false, false, true});
    CHECK(i5_profile(g_family(8)) == I5Profile{false, true, true});
    CHECK(i5_profile(e_family(8)) == I5Profile{true, true, true});
    CHECK(i5_profile(e_family(8)).to_string() == "{T5,U5,W5}");
    CHECK(I5Profile{}.to_string() == "{}");
    CHECK(I5Profile{}.empty());

    // Indecomposable hosts on at least 5 vertices never have {T5,U5} or
    // {T5,W5}, and never an empty profile.
    for (int n = 5; n <= 7; ++n)
        for (const auto & t : indecomposable_tournaments(n)) {
            const auto p = i5_profile(t);
            CHECK_FALSE(p.empty());
            CHECK_FALSE(p == I5Profile{true, true, false});
            CHECK_FALSE(p == I5Profile{true, false, true});
        }
}

TEST_CASE("indecomposable subtournament classes")
{
    const auto w9 = indecomposable_subtournaments(w_family(9), 7);
    CHECK(w9.size() == 1);
    CHECK(w9.contains_isomorph_of(w_family(7)));

    const auto t9 = indecomposable_subtournaments(circular(9), 5);
    CHECK(t9.size() == 1);
    CHECK(t9.contains_isomorph_of(circular(5)));
    // Each of the 126 five-subsets is counted, not automorphisms.
    std::size_t inside = 0;
    for_each_subset_of_size(circular(9).vertices(), 5, [&](VertexSet x) {
        inside += is_indecomposable(circular(9), x) ? 1 : 0;
        return true;
    });
    CHECK(t9.begin()->second.multiplicity == inside);

    for (const auto & t : {paley7(), b6(), u_family(7), e_family(7)}) {
        const auto whole = indecomposable_subtournaments(t, t.order());
        CHECK(whole.size() == 1);
        CHECK(whole.contains_isomorph_of(t));
    }
    CHECK(indecomposable_subtournaments(transitive(6), 4).empty());
    CHECK_THROWS_AS(indecomposable_subtournaments(circular(5), 2), Error);
    CHECK_THROWS_AS(indecomposable_subtournaments(circular(5), 6), Error);

    // Representatives really are the subtournaments they stand for.
    std::mt19937_64 rng(61);
    const auto host = oracle::random_tournament(9, rng);
    for (const auto & [code, entry] : indecomposable_subtournaments(host, 5)) {
        CHECK(canonical_code(entry.representative) == code);
        CHECK(embeds(entry.representative, host));
        CHECK(is_indecomposable(entry.representative));
    }
}

TEST_CASE("iso class set")
{
    IsoClassSet s;
    const auto a = s.insert(circular(5));
    const auto b = s.insert(relabel(circular(5), std::vector<int>{4, 3, 2, 1, 0}));
    CHECK(a == b);
    CHECK(s.size() == 1);
    CHECK(s.begin()->second.multiplicity == 2);
    s.insert(w_family(5));
    CHECK(s.size() == 2);
    const auto codes = s.codes();
    CHECK(codes.size() == 2);
    CHECK(std::is_sorted(codes.begin(), codes.end()));
}

TEST_CASE("criticality from seven-vertex subtournaments")
{
    CHECK(criticality_by_seven(u_family(9)));
    CHECK(criticality_by_seven(circular(9)));
    CHECK(criticality_by_seven(w_family(7)));
    CHECK_FALSE(criticality_by_seven(paley7()));
    CHECK_FALSE(is_critical(paley7()));
    for (const auto & t : indecomposable_tournaments(8))
        CHECK(criticality_by_seven(t) == is_critical(t));
    CHECK_THROWS_AS(criticality_by_seven(b6()), Error);
    CHECK_THROWS_AS(criticality_by_seven(transitive(8)), Error);
}
