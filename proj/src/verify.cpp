#include <tourney/canonical.hpp>
#include <tourney/decomposition.hpp>
#include <tourney/detail/parallel.hpp>
#include <tourney/embedding.hpp>
#include <tourney/error.hpp>
#include <tourney/families.hpp>
#include <tourney/verify.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <set>

namespace tourney {

namespace {
    constexpr std::string_view engine_version =
        "tourney 1.0.0 (canonical: ordered-partition branch and bound; intervals: pair closure; enumeration: canonical augmentation)";

    const std::vector<Claim> registry = {
        {ClaimId::T1, "T1", "the critical tournaments on m >= 5 vertices are T_m, U_m, W_m for odd m and there are none for even m", 5, 9, 10, true},
        {ClaimId::T2, "T2", "indecomposable tournaments on >= 5 vertices omitting W5 are B6, P7, T_m and U_m", 5, 9, 10, true},
        {ClaimId::T3, "T3", "an indecomposable tournament containing a diamond and T5 contains U5 and W5", 5, 8, 10, true},
        {ClaimId::P4, "P4", "an indecomposable tournament on >= 5 vertices omits both diamonds iff it is some T_m", 5, 9, 10, true},
        {ClaimId::L6, "L6", "Ext(X), [X] and the X(u) partition V - X, with the three two-vertex extension rules", 3, 7, 10, true},
        {ClaimId::P7, "P7", "an indecomposable T(X), |X| >= 3, inside indecomposable T with |V - X| >= 2 extends by two vertices", 5, 7, 10, true},
        {ClaimId::C8, "C8", "in an indecomposable tournament of even order >= 6, every x has some y != x with T - y indecomposable", 6, 8, 10, true},
        {ClaimId::R9, "R9", "the indecomposable 5-vertex tournaments are T5, U5, W5, all critical, and every indecomposable tournament on >= 5 vertices contains one", 5, 9, 10, true},
        {ClaimId::R10, "R10", "T_{2n+1} is regular, T_{2n+1} - i has the single nontrivial interval {i+n, i+n+1}, |Aut| = 2n+1 generated by i -> i+1, and i -> -i maps it onto its dual", 5, 11, 17, false},
        {ClaimId::L11, "L11", "indecomposable subtournaments on >= 5 vertices of T_m, U_m, W_m are smaller members of the same family", 5, 11, 15, false},
        {ClaimId::L12, "L12", "an indecomposable tournament on >= 5 vertices is critical iff it has no indecomposable 6-vertex subtournament", 5, 9, 10, true},
        {ClaimId::R13, "R13", "E, F, G are indecomposable with 5-vertex profiles {T5,U5,W5}, {W5}, {U5,W5}", 6, 11, 24, false},
        {ClaimId::C14, "C14", "indecomposable T is some T_m iff its indecomposable 5-vertex subtournaments are all T5; it is B6, P7 or some U_m iff they are all U5", 5, 9, 10, true},
        {ClaimId::P15, "P15", "indecomposable T on >= 7 vertices is some W_m iff its indecomposable 7-vertex subtournaments are all W7", 7, 9, 10, true},
        {ClaimId::C16, "C16", "indecomposable T on >= 7 vertices is critical iff its indecomposable 7-vertex subtournaments all fall in exactly one of T7, U7, W7", 7, 9, 10, true},
        {ClaimId::X17, "X17", "exploratory: indecomposable tournaments whose indecomposable 5-vertex subtournaments are all W5", 5, 9, 10, true},
    };

    /// Ordered collection of violations with a cap on what is kept.
    class Findings {
    public:
        explicit Findings(std::size_t cap) : cap_(cap) {}

        void add(std::string code, std::string condition)
        {
            ++total_;
            if (cap_ == 0 || kept_.size() < cap_)
                kept_.push_back({std::move(code), std::move(condition)});
        }

        void add_all(std::vector<Counterexample> & batch)
        {
            for (auto & c : batch)
                add(std::move(c.code), std::move(c.condition));
        }

        std::size_t total() const noexcept { return total_; }
        std::vector<Counterexample> take() { return std::move(kept_); }

    private:
        std::size_t cap_;
        std::size_t total_ = 0;
        std::vector<Counterexample> kept_;
    };

    using Violations = std::vector<Counterexample>;

    /// Evaluates check(t, violations) on every tournament, possibly in
    /// parallel, and merges violations in input order.
    template <typename Check>
    void scan(const std::vector<Tournament> & ts, int jobs, Findings & findings, Check && check)
    {
        std::vector<Violations> per(ts.size());
        detail::parallel_for(ts.size(), jobs, [&](std::size_t i, int) { check(ts[i], per[i]); });
        for (auto & v : per)
            findings.add_all(v);
    }

    /// Parallel map of a predicate over tournaments, results in input order.
    template <typename Pred>
    std::vector<char> flags(const std::vector<Tournament> & ts, int jobs, Pred && pred)
    {
        std::vector<char> result(ts.size());
        detail::parallel_for(ts.size(), jobs, [&](std::size_t i, int) { result[i] = pred(ts[i]) ? 1 : 0; });
        return result;
    }

    struct Context {
        const VerifyOptions & options;
        Universe & universe;
        VerificationReport & report;
        Findings & findings;
        EmbedFunction embeds;

        void record(int n, std::size_t classes, std::size_t examined)
        {
            report.orders.push_back(n);
            report.classes.push_back(classes);
            report.examined.push_back(examined);
        }

        int jobs() const { return options.jobs; }
    };

    struct Patterns {
        Tournament t5 = circular(5), u5 = u_family(5), w5 = w_family(5);
        Tournament d4 = diamond(false), d4_dual = diamond(true);
    };

    const Patterns & patterns()
    {
        static const Patterns p;
        return p;
    }

    /// Compares a found set of class codes against the expected one.
    void compare_sets(Context & ctx, int n, const std::set<CanonicalCode> & found, const std::map<CanonicalCode, std::string> & expected,
        std::string_view what)
    {
        for (const auto & code : found)
            if (! expected.contains(code))
                ctx.findings.add(code.to_string(), std::string(what) + " but not among the expected classes on " + std::to_string(n) + " vertices");
        for (const auto & [code, name] : expected)
            if (! found.contains(code))
                ctx.findings.add(code.to_string(), "expected " + name + " to be " + std::string(what) + ", it is not");
    }

    void add_family(std::map<CanonicalCode, std::string> & m, const Tournament & t, std::string name)
    {
        m.emplace(canonical_code(t), std::move(name));
    }

    void check_t1(Context & ctx, int max_n)
    {
        for (int n = 5; n <= max_n; ++n) {
            const auto & all = ctx.universe.classes(n);
            const auto critical = flags(all, ctx.jobs(), [](const Tournament & t) { return is_critical(t); });
            std::set<CanonicalCode> found;
            for (std::size_t i = 0; i < all.size(); ++i)
                if (critical[i])
                    found.insert(canonical_code(all[i]));
            std::map<CanonicalCode, std::string> expected;
            if (n % 2 == 1) {
                add_family(expected, circular(n), "T" + std::to_string(n));
                add_family(expected, u_family(n), "U" + std::to_string(n));
                add_family(expected, w_family(n), "W" + std::to_string(n));
            }
            compare_sets(ctx, n, found, expected, "critical");
            ctx.record(n, all.size(), all.size());
        }
    }

    void check_t2(Context & ctx, int max_n)
    {
        const auto & w5 = patterns().w5;
        for (int n = 5; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            const auto omits = flags(ind, ctx.jobs(), [&](const Tournament & t) { return ! ctx.embeds(w5, t); });
            std::set<CanonicalCode> found;
            for (std::size_t i = 0; i < ind.size(); ++i)
                if (omits[i])
                    found.insert(canonical_code(ind[i]));
            std::map<CanonicalCode, std::string> expected;
            if (n % 2 == 1) {
                add_family(expected, circular(n), "T" + std::to_string(n));
                add_family(expected, u_family(n), "U" + std::to_string(n));
            }
            if (n == 6)
                add_family(expected, b6(), "B6");
            if (n == 7)
                add_family(expected, paley7(), "P7");
            compare_sets(ctx, n, found, expected, "indecomposable and W5-free");
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    bool has_diamond(const Context & ctx, const Tournament & t)
    {
        return ctx.embeds(patterns().d4, t) || ctx.embeds(patterns().d4_dual, t);
    }

    void check_t3(Context & ctx, int max_n)
    {
        const auto & p = patterns();
        for (int n = 5; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                if (! has_diamond(ctx, t) || ! ctx.embeds(p.t5, t))
                    return;
                const bool u5 = ctx.embeds(p.u5, t), w5 = ctx.embeds(p.w5, t);
                if (! u5 || ! w5)
                    out.push_back({to_code(t), std::string("a diamond and T5 embed but ") + (! u5 && ! w5 ? "U5 and W5 do" : ! u5 ? "U5 does" : "W5 does") + " not"});
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_p4(Context & ctx, int max_n)
    {
        for (int n = 5; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            const auto circ = n % 2 == 1 ? std::optional(canonical_code(circular(n))) : std::nullopt;
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                const bool diamond_free = ! has_diamond(ctx, t);
                const bool is_circular = circ && canonical_code(t) == *circ;
                if (diamond_free && ! is_circular)
                    out.push_back({to_code(t), "omits both diamonds but is not T" + std::to_string(n)});
                if (! diamond_free && is_circular)
                    out.push_back({to_code(t), "is T" + std::to_string(n) + " but contains a diamond"});
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_l6_one(const Tournament & t, VertexSet base, Violations & out)
    {
        const auto p = exterior_partition(t, base);
        const VertexSet outside = t.vertices() - base;
        const std::string where = "X=" + base.to_string() + ": ";

        // Item 1: every outside vertex lies in exactly one part.
        for (int x : outside) {
            int memberships = (p.ext.contains(x) ? 1 : 0) + (p.bracket.contains(x) ? 1 : 0);
            for (int u : base)
                memberships += p.per_vertex[u].contains(x) ? 1 : 0;
            if (memberships != 1)
                out.push_back({to_code(t), where + "vertex " + std::to_string(x) + " lies in " + std::to_string(memberships) + " parts"});
        }
        auto two = [&](int x, int y) { return base | VertexSet::single(x) | VertexSet::single(y); };

        // Item 2.
        for (int u : base)
            for (int x : p.per_vertex[u])
                for (int y : outside - p.per_vertex[u]) {
                    const VertexSet w = two(x, y);
                    if (! is_indecomposable(t, w) && ! is_interval(t, VertexSet::single(u) | VertexSet::single(x), w))
                        out.push_back({to_code(t), where + "x=" + std::to_string(x) + " in X(" + std::to_string(u) + "), y=" + std::to_string(y)
                                                       + ": T(X+{x,y}) decomposable but {u,x} is not an interval"});
                }
        // Item 3.
        for (int x : p.bracket)
            for (int y : outside - p.bracket) {
                const VertexSet w = two(x, y);
                if (! is_indecomposable(t, w) && ! is_interval(t, base | VertexSet::single(y), w))
                    out.push_back({to_code(t), where + "x=" + std::to_string(x) + " in [X], y=" + std::to_string(y)
                                                   + ": T(X+{x,y}) decomposable but X+{y} is not an interval"});
            }
        // Item 4.
        for (int x : p.ext)
            for (int y : p.ext) {
                if (y <= x)
                    continue;
                const VertexSet w = two(x, y);
                if (! is_indecomposable(t, w) && ! is_interval(t, VertexSet::single(x) | VertexSet::single(y), w))
                    out.push_back({to_code(t), where + "x=" + std::to_string(x) + ", y=" + std::to_string(y)
                                                   + " in Ext(X): T(X+{x,y}) decomposable but {x,y} is not an interval"});
            }
    }

    void check_l6(Context & ctx, int max_n)
    {
        for (int n = 3; n <= max_n; ++n) {
            const auto & all = ctx.universe.classes(n);
            scan(all, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                const VertexSet v = t.vertices();
                for (int k = 3; k < n; ++k)
                    for_each_subset_of_size(v, k, [&](VertexSet base) {
                        if (is_indecomposable(t, base))
                            check_l6_one(t, base, out);
                        return true;
                    });
            });
            ctx.record(n, all.size(), all.size());
        }
    }

    void check_p7(Context & ctx, int max_n)
    {
        for (int n = 5; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                for (int k = 3; k <= n - 2; ++k)
                    for_each_subset_of_size(t.vertices(), k, [&](VertexSet base) {
                        if (! is_indecomposable(t, base))
                            return true;
                        try {
                            auto [x, y] = extend_indecomposable_by_two(t, base);
                            if (! is_indecomposable(t, base | VertexSet::single(x) | VertexSet::single(y)))
                                out.push_back({to_code(t), "X=" + base.to_string() + ": returned pair does not give an indecomposable extension"});
                        }
                        catch (const Error & e) {
                            if (e.code() != Errc::internal_error)
                                throw;
                            out.push_back({to_code(t), "X=" + base.to_string() + ": no pair x,y outside X gives an indecomposable T(X+{x,y})"});
                        }
                        return true;
                    });
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_c8(Context & ctx, int max_n)
    {
        for (int n = 6; n <= max_n; n += 2) {
            const auto & ind = ctx.universe.indecomposable(n);
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                for (int x = 0; x < n; ++x) {
                    try {
                        const int y = removable_vertex(t, x);
                        if (y == x || ! is_indecomposable(remove_vertex(t, y)))
                            out.push_back({to_code(t), "x=" + std::to_string(x) + ": returned vertex is not removable"});
                    }
                    catch (const Error & e) {
                        if (e.code() != Errc::internal_error)
                            throw;
                        out.push_back({to_code(t), "x=" + std::to_string(x) + ": T - y is decomposable for every y != x"});
                    }
                }
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_r9(Context & ctx, int max_n)
    {
        const auto & p = patterns();
        {
            const auto & all4 = ctx.universe.classes(4);
            for (const auto & t : all4)
                if (is_indecomposable(t))
                    ctx.findings.add(to_code(t), "indecomposable tournament on 4 vertices");
            ctx.record(4, all4.size(), all4.size());
        }
        for (int n = 5; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            if (n == 5) {
                std::set<CanonicalCode> found;
                for (const auto & t : ind) {
                    found.insert(canonical_code(t));
                    if (! is_critical(t))
                        ctx.findings.add(to_code(t), "indecomposable on 5 vertices but not critical");
                }
                std::map<CanonicalCode, std::string> expected;
                add_family(expected, p.t5, "T5");
                add_family(expected, p.u5, "U5");
                add_family(expected, p.w5, "W5");
                compare_sets(ctx, n, found, expected, "indecomposable");
            }
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                if (! ctx.embeds(p.t5, t) && ! ctx.embeds(p.u5, t) && ! ctx.embeds(p.w5, t))
                    out.push_back({to_code(t), "omits each of T5, U5, W5"});
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_r10(Context & ctx, int max_n)
    {
        for (int size = 5; size <= max_n; size += 2) {
            const int n = size / 2;
            const auto t = circular(size);
            const std::string code = to_code(t);
            for (int i = 0; i < size; ++i)
                if (t.out_neighbours(i).size() != n)
                    ctx.findings.add(code, "vertex " + std::to_string(i) + " has score " + std::to_string(t.out_neighbours(i).size()));

            for (int i = 0; i < size; ++i) {
                const auto sub = subtournament(t, t.vertices() - VertexSet::single(i));
                const auto intervals = nontrivial_intervals(sub.tournament);
                const VertexSet expected = VertexSet::single((i + n) % size) | VertexSet::single((i + n + 1) % size);
                bool ok = intervals.size() == 1;
                if (ok) {
                    VertexSet back;
                    for (int v : intervals.intervals.front())
                        back.insert(sub.labels[v]);
                    ok = back == expected;
                }
                if (! ok)
                    ctx.findings.add(code, "T - " + std::to_string(i) + " does not have " + expected.to_string() + " as its only nontrivial interval");
            }

            if (automorphism_count(t) != static_cast<std::uint64_t>(size))
                ctx.findings.add(code, "automorphism group has order " + std::to_string(automorphism_count(t)));
            std::vector<int> sigma(size), pi(size);
            for (int i = 0; i < size; ++i) {
                sigma[i] = (i + 1) % size;
                pi[i] = (size - i) % size;
            }
            if (relabel(t, sigma) != t)
                ctx.findings.add(code, "i -> i+1 is not an automorphism");
            if (relabel(t, pi) != dual(t))
                ctx.findings.add(code, "i -> -i is not an isomorphism onto the dual");
            ctx.record(size, 1, 1);
        }
    }

    void check_l11(Context & ctx, int max_n)
    {
        struct Member {
            char letter;
            Tournament (*make)(int);
        };
        const Member members[] = {{'T', circular}, {'U', u_family}, {'W', w_family}};
        for (int size = 5; size <= max_n; size += 2) {
            for (const auto & m : members) {
                const auto t = m.make(size);
                for (int k = 5; k <= size; ++k) {
                    const auto classes = indecomposable_subtournaments(t, k);
                    std::optional<CanonicalCode> expected;
                    if (k % 2 == 1)
                        expected = canonical_code(m.make(k));
                    for (const auto & [code, entry] : classes)
                        if (! expected || code != *expected)
                            ctx.findings.add(to_code(t), std::string(1, m.letter) + std::to_string(size) + " has an indecomposable subtournament on "
                                                             + std::to_string(k) + " vertices not isomorphic to " + m.letter + std::to_string(k) + ": "
                                                             + code.to_string());
                }
            }
            ctx.record(size, 3, 3);
        }
    }

    void check_l12(Context & ctx, int max_n)
    {
        for (int n = 5; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                const bool critical = is_critical(t);
                const bool omits_six = ! has_indecomposable_subtournament(t, 6);
                if (critical != omits_six)
                    out.push_back({to_code(t), critical ? "critical but contains an indecomposable 6-vertex subtournament"
                                                        : "not critical yet omits every indecomposable 6-vertex tournament"});
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_r13(Context & ctx, int max_n)
    {
        const auto & p = patterns();
        struct Member {
            const char * name;
            Tournament (*make)(int);
            I5Profile expected;
        };
        const Member members[] = {
            {"E", e_family, {true, true, true}},
            {"F", f_family, {false, false, true}},
            {"G", g_family, {false, true, true}},
        };
        for (int size = 6; size <= max_n; ++size) {
            for (const auto & m : members) {
                const auto t = m.make(size);
                const std::string label = std::string(m.name) + std::to_string(size);
                if (! is_indecomposable(t))
                    ctx.findings.add(to_code(t), label + " is decomposable");
                const I5Profile got{ctx.embeds(p.t5, t), ctx.embeds(p.u5, t), ctx.embeds(p.w5, t)};
                if (got != m.expected)
                    ctx.findings.add(to_code(t), label + " has 5-vertex profile " + got.to_string() + ", expected " + m.expected.to_string());
            }
            ctx.record(size, 3, 3);
        }
    }

    void check_c14(Context & ctx, int max_n)
    {
        const auto t5 = canonical_code(patterns().t5), u5 = canonical_code(patterns().u5);
        const auto b6_code = canonical_code(b6()), p7_code = canonical_code(paley7());
        for (int n = 5; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            std::optional<CanonicalCode> tn, un;
            if (n % 2 == 1) {
                tn = canonical_code(circular(n));
                un = canonical_code(u_family(n));
            }
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                const auto classes = indecomposable_subtournaments(t, 5);
                const bool only_t5 = classes.size() == 1 && classes.contains(t5);
                const bool only_u5 = classes.size() == 1 && classes.contains(u5);
                const auto code = canonical_code(t);
                const bool is_t = tn && code == *tn;
                const bool is_u_like = (un && code == *un) || code == b6_code || code == p7_code;
                if (is_t != only_t5)
                    out.push_back({to_code(t), is_t ? "is T" + std::to_string(n) + " but has an indecomposable 5-vertex subtournament other than T5"
                                                    : "all indecomposable 5-vertex subtournaments are T5 but it is not T" + std::to_string(n)});
                if (is_u_like != only_u5)
                    out.push_back({to_code(t), is_u_like ? "is B6, P7 or U" + std::to_string(n) + " but has an indecomposable 5-vertex subtournament other than U5"
                                                         : "all indecomposable 5-vertex subtournaments are U5 but it is not B6, P7 or U" + std::to_string(n)});
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_p15(Context & ctx, int max_n)
    {
        const auto w7 = canonical_code(w_family(7));
        for (int n = 7; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            const auto wn = n % 2 == 1 ? std::optional(canonical_code(w_family(n))) : std::nullopt;
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                const auto classes = indecomposable_subtournaments(t, 7);
                const bool only_w7 = classes.size() == 1 && classes.contains(w7);
                const bool is_w = wn && canonical_code(t) == *wn;
                if (is_w != only_w7)
                    out.push_back({to_code(t), is_w ? "is W" + std::to_string(n) + " but has an indecomposable 7-vertex subtournament other than W7"
                                                    : "all indecomposable 7-vertex subtournaments are W7 but it is not W" + std::to_string(n)});
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_c16(Context & ctx, int max_n)
    {
        for (int n = 7; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            scan(ind, ctx.jobs(), ctx.findings, [&](const Tournament & t, Violations & out) {
                const bool critical = is_critical(t);
                if (criticality_by_seven(t) != critical)
                    out.push_back({to_code(t), critical ? "critical but its indecomposable 7-vertex subtournaments are not all one of T7, U7, W7"
                                                        : "not critical but its indecomposable 7-vertex subtournaments are all one of T7, U7, W7"});
            });
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }

    void check_x17(Context & ctx, int max_n)
    {
        const auto w5 = canonical_code(patterns().w5);
        for (int n = 5; n <= max_n; ++n) {
            const auto & ind = ctx.universe.indecomposable(n);
            const auto only_w5 = flags(ind, ctx.jobs(), [&](const Tournament & t) {
                const auto classes = indecomposable_subtournaments(t, 5);
                return classes.size() == 1 && classes.contains(w5);
            });
            for (std::size_t i = 0; i < ind.size(); ++i)
                if (only_w5[i])
                    ctx.report.witnesses.push_back(to_code(ind[i]));
            ctx.record(n, ctx.universe.classes(n).size(), ind.size());
        }
    }
}

const std::vector<Claim> & claims()
{
    return registry;
}

const Claim & claim(ClaimId id)
{
    for (const auto & c : registry)
        if (c.id == id)
            return c;
    throw Error(Errc::unknown_claim, "unregistered claim id");
}

ClaimId parse_claim_id(std::string_view name)
{
    for (const auto & c : registry)
        if (c.name == name)
            return c.id;
    throw Error(Errc::unknown_claim, "unknown claim '" + std::string(name) + "'");
}

const std::vector<Tournament> & Universe::classes(int n)
{
    auto it = all_.find(n);
    if (it == all_.end())
        it = all_.emplace(n, all_tournaments(n, options_)).first;
    return it->second;
}

const std::vector<Tournament> & Universe::indecomposable(int n)
{
    auto it = indecomposable_.find(n);
    if (it == indecomposable_.end()) {
        const auto & all = classes(n);
        const auto keep = flags(all, options_.jobs, [](const Tournament & t) { return is_indecomposable(t); });
        std::vector<Tournament> selected;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (keep[i])
                selected.push_back(all[i]);
        it = indecomposable_.emplace(n, std::move(selected)).first;
    }
    return it->second;
}

void check_bound(ClaimId id, int max_n, bool allow_big)
{
    const auto & c = claim(id);
    if (max_n > c.guard)
        throw Error(Errc::bound_too_large, std::string(c.name) + " accepts bounds up to " + std::to_string(c.guard) + ", got " + std::to_string(max_n));
    if (c.exhaustive && max_n > default_enumeration_order && ! allow_big)
        throw Error(Errc::bound_too_large, std::string(c.name) + " bound " + std::to_string(max_n) + " needs allow_big");
    if (max_n < c.min_n)
        throw Error(Errc::bound_too_small, std::string(c.name) + " needs a bound of at least " + std::to_string(c.min_n) + ", got " + std::to_string(max_n));
}

VerificationReport verify_claim(ClaimId id, const VerifyOptions & options, Universe * universe)
{
    return verify_claim(id, claim(id).default_max_n, options, universe);
}

VerificationReport verify_claim(ClaimId id, int max_n, const VerifyOptions & options, Universe * universe)
{
    check_bound(id, max_n, options.allow_big);
    const auto & c = claim(id);
    const auto start = std::chrono::steady_clock::now();

    std::optional<Universe> own;
    if (! universe)
        universe = &own.emplace(EnumerateOptions{options.jobs, options.allow_big});

    VerificationReport report;
    report.claim = std::string(c.name);
    report.min_n = c.min_n;
    report.max_n = max_n;
    report.engine = std::string(engine_version);

    Findings findings(options.counterexample_cap);
    EmbedFunction embed_fn = options.embeds ? options.embeds : EmbedFunction([](const Tournament & p, const Tournament & h) { return embeds(p, h); });
    Context ctx{options, *universe, report, findings, std::move(embed_fn)};

    switch (id) {
    case ClaimId::T1: check_t1(ctx, max_n); break;
    case ClaimId::T2: check_t2(ctx, max_n); break;
    case ClaimId::T3: check_t3(ctx, max_n); break;
    case ClaimId::P4: check_p4(ctx, max_n); break;
    case ClaimId::L6: check_l6(ctx, max_n); break;
    case ClaimId::P7: check_p7(ctx, max_n); break;
    case ClaimId::C8: check_c8(ctx, max_n); break;
    case ClaimId::R9: check_r9(ctx, max_n); break;
    case ClaimId::R10: check_r10(ctx, max_n); break;
    case ClaimId::L11: check_l11(ctx, max_n); break;
    case ClaimId::L12: check_l12(ctx, max_n); break;
    case ClaimId::R13: check_r13(ctx, max_n); break;
    case ClaimId::C14: check_c14(ctx, max_n); break;
    case ClaimId::P15: check_p15(ctx, max_n); break;
    case ClaimId::C16: check_c16(ctx, max_n); break;
    case ClaimId::X17: check_x17(ctx, max_n); break;
    }

    report.violation_count = findings.total();
    report.counterexamples = findings.take();
    report.pass = report.violation_count == 0;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<VerificationReport> verify_all(const std::map<ClaimId, int> & bounds, const VerifyOptions & options)
{
    auto bound_of = [&](const Claim & c) {
        auto it = bounds.find(c.id);
        return it == bounds.end() ? c.default_max_n : it->second;
    };
    for (const auto & c : registry)
        check_bound(c.id, bound_of(c), options.allow_big);

    Universe universe(EnumerateOptions{options.jobs, options.allow_big});
    std::vector<VerificationReport> reports;
    for (const auto & c : registry)
        reports.push_back(verify_claim(c.id, bound_of(c), options, &universe));
    return reports;
}

std::string to_json(const VerificationReport & report)
{
    nlohmann::json j;
    j["claim"] = report.claim;
    j["statement"] = claim(parse_claim_id(report.claim)).statement;
    j["bounds"] = {{"min_n", report.min_n}, {"max_n", report.max_n}};
    j["universe"] = {{"n", report.orders}, {"classes", report.classes}, {"examined", report.examined}};
    j["verdict"] = report.pass ? "pass" : "fail";
    auto codes = nlohmann::json::array();
    auto details = nlohmann::json::array();
    for (const auto & c : report.counterexamples) {
        codes.push_back(c.code);
        details.push_back({{"code", c.code}, {"condition", c.condition}});
    }
    j["counterexamples"] = std::move(codes);
    j["violations"] = std::move(details);
    j["violation_count"] = report.violation_count;
    if (! report.witnesses.empty() || report.claim == "X17")
        j["witnesses"] = report.witnesses;
    j["seconds"] = report.seconds;
    j["engine"] = report.engine;
    return j.dump();
}

}
