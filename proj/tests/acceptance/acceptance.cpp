// Replays each acceptance criterion on one worker and prints one PASS/FAIL
// line per criterion. Exit status is nonzero if any criterion fails.

#include <tourney/canonical.hpp>
#include <tourney/decomposition.hpp>
#include <tourney/embedding.hpp>
#include <tourney/enumerate.hpp>
#include <tourney/families.hpp>
#include <tourney/verify.hpp>

#include "../support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

using namespace tourney;

namespace {
    using Clock = std::chrono::steady_clock;

    const EnumerateOptions one_job{1, false};

    VerifyOptions verify_options()
    {
        VerifyOptions o;
        o.jobs = 1;
        return o;
    }

    /// Collects failure reasons for one criterion.
    struct Outcome {
        std::vector<std::string> problems;
        std::string note;

        void expect(bool ok, const std::string & what)
        {
            if (! ok)
                problems.push_back(what);
        }
    };

    double seconds_since(Clock::time_point start)
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    void expect_report(Outcome & o, const VerificationReport & r)
    {
        std::ostringstream s;
        s << r.claim << " up to " << r.max_n << ": " << r.violation_count << " violations";
        if (! r.counterexamples.empty())
            s << ", first " << r.counterexamples.front().code << " (" << r.counterexamples.front().condition << ")";
        o.expect(r.pass, s.str());
    }

    std::set<CanonicalCode> codes_of(const std::vector<Tournament> & ts)
    {
        std::set<CanonicalCode> s;
        for (const auto & t : ts)
            s.insert(canonical_code(t));
        return s;
    }

    std::set<CanonicalCode> codes_of(std::initializer_list<Tournament> ts)
    {
        return codes_of(std::vector<Tournament>(ts));
    }

    /// Number of iso classes on n vertices by brute force: every labelled
    /// tournament, reduced to its least code over all labellings (n <= 5) or
    /// to its canonical key (larger n).
    std::size_t labelled_dedup_count(int n)
    {
        const std::uint64_t pairs = n * (n - 1) / 2;
        if (n <= 5) {
            std::set<std::string> seen;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
                seen.insert(oracle::min_code(oracle::labelled(n, bits)));
            return seen.size();
        }
        std::unordered_set<std::uint64_t> seen;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits)
            seen.insert(*canonical_code(oracle::labelled(n, bits)).packed());
        return seen.size();
    }

    bool isomorphic_to_one_of(const Tournament & t, std::initializer_list<Tournament> named)
    {
        for (const auto & u : named)
            if (oracle::isomorphic(t, u))
                return true;
        return false;
    }

    Outcome criterion_1(Universe &)
    {
        Outcome o;
        const std::size_t derived = labelled_dedup_count(5);
        o.expect(derived == 12, "labelled dedup found " + std::to_string(derived) + " classes, expected 12");

        const auto start = Clock::now();
        const auto all = all_tournaments(5, one_job);
        const auto ind = indecomposable_tournaments(5, one_job);
        o.expect(all.size() == derived, "enumeration found " + std::to_string(all.size()) + " classes, dedup found " + std::to_string(derived));
        o.expect(ind.size() == 3, std::to_string(ind.size()) + " indecomposable classes, expected 3");
        std::set<CanonicalCode> matched;
        for (const auto & t : ind) {
            o.expect(isomorphic_to_one_of(t, {circular(5), u_family(5), w_family(5)}), to_code(t) + " is not T5, U5 or W5");
            o.expect(is_critical(t), to_code(t) + " is not critical");
            matched.insert(canonical_code(t));
        }
        o.expect(matched == codes_of({circular(5), u_family(5), w_family(5)}), "T5, U5, W5 not all found");
        const double took = seconds_since(start);
        o.expect(took < 1.0, "took " + std::to_string(took) + " s");
        o.note = "12 classes, 3 indecomposable, all critical";
        return o;
    }

    Outcome criterion_2(Universe & universe)
    {
        Outcome o;
        const std::size_t derived = labelled_dedup_count(7);
        const auto start = Clock::now();
        const auto & all = universe.classes(7);
        o.expect(all.size() == derived, "enumeration found " + std::to_string(all.size()) + " classes, dedup found " + std::to_string(derived));
        o.expect(derived == 456, "labelled dedup found " + std::to_string(derived) + " classes");
        std::vector<Tournament> critical;
        for (const auto & t : all)
            if (is_critical(t))
                critical.push_back(t);
        o.expect(critical.size() == 3, std::to_string(critical.size()) + " critical classes, expected 3");
        o.expect(codes_of(critical) == codes_of({circular(7), u_family(7), w_family(7)}), "critical classes are not T7, U7, W7");
        for (const auto & t : critical)
            o.expect(isomorphic_to_one_of(t, {circular(7), u_family(7), w_family(7)}), to_code(t) + " fails the brute-force isomorphism check");
        expect_report(o, verify_claim(ClaimId::T1, 7, verify_options(), &universe));
        const double took = seconds_since(start);
        o.expect(took < 30.0, "took " + std::to_string(took) + " s");
        o.note = "456 classes, critical = {T7, U7, W7}";
        return o;
    }

    Outcome criterion_3(Universe & universe)
    {
        Outcome o;
        const auto start = Clock::now();
        const auto r = verify_claim(ClaimId::T3, 8, verify_options(), &universe);
        expect_report(o, r);
        o.expect(r.counterexamples.empty(), "counterexamples reported");
        std::size_t hosts = 0;
        for (int n = 5; n <= 8; ++n)
            for (const auto & t : universe.indecomposable(n))
                if (contains_diamond(t) && embeds(circular(5), t))
                    ++hosts;
        o.expect(hosts > 0, "no indecomposable class holds both a diamond and T5");

        // The same run with W5 hidden from the embedding engine must fail.
        auto broken = verify_options();
        const auto w5 = w_family(5);
        broken.embeds = [w5](const Tournament & p, const Tournament & h) { return p == w5 ? false : embeds(p, h); };
        const auto mutated = verify_claim(ClaimId::T3, 8, broken, &universe);
        o.expect(! mutated.pass && mutated.violation_count > 0, "mutated engine was not caught");

        const double took = seconds_since(start);
        o.expect(took < 300.0, "took " + std::to_string(took) + " s");
        o.note = std::to_string(hosts) + " classes with a diamond and T5, 0 counterexamples; mutation caught with "
            + std::to_string(mutated.violation_count) + " violations";
        return o;
    }

    Outcome criterion_4_and_5(Universe & universe, bool proposition)
    {
        Outcome o;
        const auto start = Clock::now();
        const std::map<int, std::set<CanonicalCode>> expected_t2 = {
            {5, codes_of({circular(5), u_family(5)})},
            {6, codes_of({b6()})},
            {7, codes_of({paley7(), circular(7), u_family(7)})},
            {8, {}},
            {9, codes_of({circular(9), u_family(9)})},
        };
        const auto w5 = w_family(5);
        for (int n = 5; n <= 9; ++n) {
            std::set<CanonicalCode> found;
            for (const auto & t : universe.indecomposable(n)) {
                const bool hit = proposition ? ! contains_diamond(t) : ! embeds(w5, t);
                if (hit)
                    found.insert(canonical_code(t));
            }
            std::set<CanonicalCode> expected;
            if (proposition) {
                if (n % 2 == 1)
                    expected.insert(canonical_code(circular(n)));
            }
            else {
                expected = expected_t2.at(n);
            }
            o.expect(found == expected, "order " + std::to_string(n) + ": " + std::to_string(found.size()) + " classes found, "
                                            + std::to_string(expected.size()) + " expected, or a different set");
        }
        expect_report(o, verify_claim(proposition ? ClaimId::P4 : ClaimId::T2, 9, verify_options(), &universe));
        const double took = seconds_since(start);
        o.expect(took < 600.0, "took " + std::to_string(took) + " s");
        o.note = proposition ? "diamond-free indecomposable classes are T5, T7, T9" : "{T5,U5}, {B6}, {P7,T7,U7}, {}, {T9,U9}";
        return o;
    }

    Outcome criterion_6(Universe & universe)
    {
        Outcome o;
        const auto start = Clock::now();
        const auto l6 = verify_claim(ClaimId::L6, 7, verify_options(), &universe);
        const auto p7 = verify_claim(ClaimId::P7, 7, verify_options(), &universe);
        const auto c8 = verify_claim(ClaimId::C8, 8, verify_options(), &universe);
        expect_report(o, l6);
        expect_report(o, p7);
        expect_report(o, c8);
        const double took = seconds_since(start);
        o.expect(took < 600.0, "took " + std::to_string(took) + " s");
        o.note = "L6 and P7 up to 7, C8 at 6 and 8, zero violations";
        return o;
    }

    Outcome criterion_7(Universe & universe)
    {
        Outcome o;
        const auto start = Clock::now();
        std::size_t checked = 0;
        for (int n = 7; n <= 9; ++n)
            for (const auto & t : universe.indecomposable(n)) {
                const bool critical = is_critical(t);
                o.expect(critical == ! has_indecomposable_subtournament(t, 6), "six-vertex criterion disagrees on " + to_code(t));
                o.expect(critical == criticality_by_seven(t), "seven-vertex criterion disagrees on " + to_code(t));
                ++checked;
            }
        expect_report(o, verify_claim(ClaimId::L12, 9, verify_options(), &universe));
        expect_report(o, verify_claim(ClaimId::C16, 9, verify_options(), &universe));
        const double took = seconds_since(start);
        o.expect(took < 900.0, "took " + std::to_string(took) + " s");
        o.note = std::to_string(checked) + " indecomposable classes at orders 7-9 agree";
        return o;
    }

    Outcome criterion_8(Universe & universe)
    {
        Outcome o;
        const auto w7 = canonical_code(w_family(7));
        for (int n = 7; n <= 9; ++n) {
            std::set<CanonicalCode> found;
            for (const auto & t : universe.indecomposable(n)) {
                const auto classes = indecomposable_subtournaments(t, 7);
                if (classes.size() == 1 && classes.contains(w7))
                    found.insert(canonical_code(t));
            }
            std::set<CanonicalCode> expected;
            if (n % 2 == 1)
                expected.insert(canonical_code(w_family(n)));
            o.expect(found == expected, "order " + std::to_string(n) + ": found " + std::to_string(found.size()) + " classes");
        }
        expect_report(o, verify_claim(ClaimId::P15, 9, verify_options(), &universe));
        o.note = "{W7}, {}, {W9}";
        return o;
    }

    Outcome criterion_9(Universe & universe)
    {
        Outcome o;
        const auto start = Clock::now();
        expect_report(o, verify_claim(ClaimId::R10, 9, verify_options(), &universe));
        for (int n = 2; n <= 4; ++n) {
            const int size = 2 * n + 1;
            const auto t = circular(size);
            o.expect(automorphism_count(t) == oracle::automorphisms(t), "automorphism count differs from brute force at " + std::to_string(size));
        }
        const double took = seconds_since(start);
        o.expect(took < 1.0, "took " + std::to_string(took) + " s");
        o.note = "T5, T7, T9";
        return o;
    }

    Outcome criterion_10(Universe & universe)
    {
        Outcome o;
        const auto start = Clock::now();
        expect_report(o, verify_claim(ClaimId::R13, 12, verify_options(), &universe));
        const double took = seconds_since(start);
        o.expect(took < 10.0, "took " + std::to_string(took) + " s");
        o.note = "E, F, G at sizes 6-12";
        return o;
    }

    Outcome criterion_11(Universe & universe)
    {
        Outcome o;
        std::size_t compared = 0;
        for (int n = 1; n <= 6; ++n)
            for (const auto & t : universe.classes(n)) {
                o.expect(is_indecomposable(t) == oracle::indecomposable(t), "pair closure disagrees on " + to_code(t));
                ++compared;
            }
        std::mt19937_64 rng(20240617);
        for (int round = 0; round < 1000; ++round) {
            const auto t = oracle::random_tournament(1 + static_cast<int>(rng() % 12), rng);
            o.expect(is_indecomposable(t) == oracle::indecomposable(t), "pair closure disagrees on " + to_code(t));
            ++compared;
        }

        std::vector<Tournament> patterns;
        for (int k = 1; k <= 5; ++k)
            for (const auto & p : universe.classes(k))
                patterns.push_back(p);
        std::size_t pairs = 0;
        for (int n = 1; n <= 6; ++n)
            for (const auto & host : universe.classes(n))
                for (const auto & p : patterns) {
                    o.expect(embeds(p, host) == oracle::embeds(p, host), "embeds disagrees: " + to_code(p) + " in " + to_code(host));
                    ++pairs;
                }

        for (int n = 1; n <= 7; ++n) {
            std::uint64_t total = 0;
            for (const auto & t : universe.classes(n))
                total += oracle::factorial(n) / automorphism_count(t);
            o.expect(total == std::uint64_t{1} << (n * (n - 1) / 2), "orbit identity fails at order " + std::to_string(n));
        }
        o.note = std::to_string(compared) + " indecomposability checks, " + std::to_string(pairs) + " embedding pairs, orbit identity n <= 7";
        return o;
    }
}

int main()
{
    Universe universe(one_job);
    struct Criterion {
        int number;
        const char * title;
        std::function<Outcome(Universe &)> run;
    };
    const Criterion criteria[] = {
        {1, "order 5: 12 classes, indecomposable = critical = {T5,U5,W5}", criterion_1},
        {2, "order 7: 456 classes, critical = {T7,U7,W7}", criterion_2},
        {3, "diamond + T5 forces U5 and W5, orders <= 8", criterion_3},
        {4, "W5-omitting indecomposable classes, orders 5-9", [](Universe & u) { return criterion_4_and_5(u, false); }},
        {5, "diamond-free indecomposable = circular, orders 5-9", [](Universe & u) { return criterion_4_and_5(u, true); }},
        {6, "exterior partition, extension by two, removable vertex", criterion_6},
        {7, "criticality by 6- and 7-vertex subtournaments, orders 7-9", criterion_7},
        {8, "all 7-vertex indecomposable subtournaments W7, orders 7-9", criterion_8},
        {9, "circular tournament structure, n = 2,3,4", criterion_9},
        {10, "E/F/G indecomposable with their 5-vertex profiles, sizes 6-12", criterion_10},
        {11, "engine cross-checks against brute-force oracles", criterion_11},
    };

    int failures = 0;
    for (const auto & c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run(universe);
        }
        catch (const std::exception & e) {
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        const double took = seconds_since(start);
        if (o.problems.empty()) {
            std::printf("PASS criterion %2d: %s [%s] (%.2f s)\n", c.number, c.title, o.note.c_str(), took);
        }
        else {
            ++failures;
            std::printf("FAIL criterion %2d: %s (%.2f s)\n", c.number, c.title, took);
            for (std::size_t i = 0; i < o.problems.size() && i < 10; ++i)
                std::printf("    %s\n", o.problems[i].c_str());
            if (o.problems.size() > 10)
                std::printf("    ... %zu more\n", o.problems.size() - 10);
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
