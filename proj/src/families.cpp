#include <tourney/error.hpp>
#include <tourney/families.hpp>

#include <charconv>

namespace tourney {

namespace {
    void require_odd(int size, int minimum, std::string_view what)
    {
        if (size < minimum || size % 2 == 0)
            throw Error(Errc::bad_size, std::string(what) + " needs an odd size >= " + std::to_string(minimum) + ", got " + std::to_string(size));
    }

    void require_at_least(int size, int minimum, std::string_view what)
    {
        if (size < minimum)
            throw Error(Errc::bad_size, std::string(what) + " needs size >= " + std::to_string(minimum) + ", got " + std::to_string(size));
        if (size > max_order)
            throw Error(Errc::bad_size, std::string(what) + " size exceeds " + std::to_string(max_order));
    }

    Tournament circular_unchecked(int size)
    {
        const int half = size / 2;
        return Tournament::from_relation(size, [&](int i, int j) { return j - i <= half; });
    }

    Tournament f_unchecked(int size)
    {
        return Tournament::from_relation(size, [](int i, int j) { return i + 1 < j; });
    }

    Tournament flip_inside(const Tournament & t, VertexSet inside)
    {
        std::vector<std::uint64_t> out(t.out_masks().begin(), t.out_masks().end());
        for (int x : inside) {
            const std::uint64_t within = out[x] & inside.bits();
            const std::uint64_t lost = inside.bits() & ~out[x] & ~(std::uint64_t{1} << x);
            out[x] = (out[x] & ~within) | lost;
        }
        return Tournament::from_masks_unchecked(std::move(out));
    }
}

Tournament circular(int size)
{
    require_odd(size, 3, "circular");
    require_at_least(size, 3, "circular");
    return circular_unchecked(size);
}

Tournament u_family(int size)
{
    require_odd(size, 5, "u_family");
    require_at_least(size, 5, "u_family");
    const int half = size / 2;
    return flip_inside(circular_unchecked(size), VertexSet::range(size) - VertexSet::range(half + 1));
}

Tournament w_family(int size)
{
    require_odd(size, 5, "w_family");
    require_at_least(size, 5, "w_family");
    const int top = size - 1;
    return Tournament::from_relation(size, [&](int i, int j) {
        if (j != top)
            return true;
        return i % 2 == 1;
    });
}

Tournament paley7()
{
    return Tournament::from_relation(7, [](int i, int j) {
        const int d = j - i;
        return d == 1 || d == 2 || d == 4;
    });
}

Tournament b6()
{
    return subtournament(paley7(), VertexSet::range(6)).tournament;
}

Tournament c3()
{
    return circular_unchecked(3);
}

Tournament diamond(bool dual_flag)
{
    auto d4 = Tournament::from_relation(4, [](int i, int j) {
        if (j == 3)
            return false;
        return j - i == 1;
    });
    return dual_flag ? dual(d4) : d4;
}

Tournament transitive(int size)
{
    if (size < 0 || size > max_order)
        throw Error(Errc::bad_size, "transitive size " + std::to_string(size) + " outside 0.." + std::to_string(max_order));
    return Tournament::from_relation(size, [](int, int) { return true; });
}

Tournament e_family(int size)
{
    require_at_least(size, 6, "e_family");
    const auto t5 = circular_unchecked(5);
    return Tournament::from_relation(size, [&](int i, int j) {
        if (j < 5)
            return t5.beats(i, j);
        // j beats only j-1 among its predecessors.
        return i != j - 1;
    });
}

Tournament f_family(int size)
{
    require_at_least(size, 6, "f_family");
    return f_unchecked(size);
}

Tournament g_family(int size)
{
    require_at_least(size, 6, "g_family");
    const int last = size - 1;
    const auto f = f_unchecked(last);
    return Tournament::from_relation(size, [&](int i, int j) {
        if (j < last)
            return f.beats(i, j);
        return i != 0;
    });
}

Tournament build(const FamilySpec & spec)
{
    const int fixed = fixed_order(spec.family);
    if (fixed != 0 && spec.order != fixed)
        throw Error(Errc::bad_size, std::string(family_name(spec.family)) + " has order " + std::to_string(fixed));
    switch (spec.family) {
    case Family::circular: return circular(spec.order);
    case Family::u: return u_family(spec.order);
    case Family::w: return w_family(spec.order);
    case Family::paley7: return paley7();
    case Family::b6: return b6();
    case Family::c3: return c3();
    case Family::diamond: return diamond(false);
    case Family::diamond_dual: return diamond(true);
    case Family::transitive: return transitive(spec.order);
    case Family::e: return e_family(spec.order);
    case Family::f: return f_family(spec.order);
    case Family::g: return g_family(spec.order);
    }
    throw Error(Errc::bad_size, "unknown family");
}

std::string_view family_name(Family f) noexcept
{
    switch (f) {
    case Family::circular: return "t";
    case Family::u: return "u";
    case Family::w: return "w";
    case Family::paley7: return "p7";
    case Family::b6: return "b6";
    case Family::c3: return "c3";
    case Family::diamond: return "d4";
    case Family::diamond_dual: return "d4d";
    case Family::transitive: return "tr";
    case Family::e: return "e";
    case Family::f: return "f";
    case Family::g: return "g";
    }
    return "?";
}

int fixed_order(Family f) noexcept
{
    switch (f) {
    case Family::paley7: return 7;
    case Family::b6: return 6;
    case Family::c3: return 3;
    case Family::diamond:
    case Family::diamond_dual: return 4;
    default: return 0;
    }
}

Family parse_family_name(std::string_view name)
{
    for (Family f : {Family::circular, Family::u, Family::w, Family::paley7, Family::b6, Family::c3, Family::diamond,
             Family::diamond_dual, Family::transitive, Family::e, Family::f, Family::g})
        if (family_name(f) == name)
            return f;
    throw Error(Errc::parse_error, "unknown family '" + std::string(name) + "'");
}

FamilySpec parse_family_spec(std::string_view spec)
{
    for (Family f : {Family::paley7, Family::b6, Family::c3, Family::diamond, Family::diamond_dual})
        if (family_name(f) == spec)
            return {f, fixed_order(f)};

    std::size_t digits = 0;
    while (digits < spec.size() && (spec[digits] < '0' || spec[digits] > '9'))
        ++digits;
    auto letters = spec.substr(0, digits);
    auto number = spec.substr(digits);
    int order = 0;
    auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), order);
    if (letters.empty() || number.empty() || ec != std::errc{} || ptr != number.data() + number.size())
        throw Error(Errc::parse_error, "bad family spec '" + std::string(spec) + "'");
    const Family f = parse_family_name(letters);
    if (fixed_order(f) != 0)
        throw Error(Errc::parse_error, "bad family spec '" + std::string(spec) + "'");
    return {f, order};
}

}
