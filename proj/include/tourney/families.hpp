#pragma once

#include <tourney/tournament.hpp>

#include <string>
#include <string_view>

namespace tourney {

/// Named tournaments, each built with the vertex labelling of its definition.
enum class Family {
    circular,   ///< T_{2n+1}
    u,          ///< U_{2n+1}
    w,          ///< W_{2n+1}
    paley7,
    b6,
    c3,
    diamond,
    diamond_dual,
    transitive,
    e,
    f,
    g,
};

struct FamilySpec {
    Family family;
    int order;
};

/// T_{2n+1} on Z/(2n+1): i->j iff j-i mod (2n+1) is in 1..n. Odd size >= 3.
Tournament circular(int size);
/// circular(size) with the arcs inside {n+1, ..., 2n} reversed. Odd size >= 5.
Tournament u_family(int size);
/// 0<1<...<2n-1, odd vertices -> 2n -> even vertices. Odd size >= 5.
Tournament w_family(int size);
/// Z/7 with i->j iff j-i is in {1, 2, 4}.
Tournament paley7();
/// paley7() - 6.
Tournament b6();
Tournament c3();
/// {0,1,2} is a 3-cycle beaten entirely by 3; the dual when `dual_flag`.
Tournament diamond(bool dual_flag);
/// i->j iff i < j.
Tournament transitive(int size);

/// T5 on {0..4}; every later vertex k beats exactly k-1 among 0..k-1. size >= 6.
Tournament e_family(int size);
/// i->j iff i+1 < j or i = j+1. size >= 6.
Tournament f_family(int size);
/// f_family(size-1) on {0..size-2}, plus a last vertex beating exactly 0. size >= 6.
Tournament g_family(int size);

/// Checks the family's size constraints; throws BadSize.
Tournament build(const FamilySpec & spec);

/// Parses a CLI family letter: t u w p7 b6 c3 d4 d4d tr e f g.
Family parse_family_name(std::string_view name);
std::string_view family_name(Family f) noexcept;
/// Order implied by fixed-size families (p7, b6, c3, d4, d4d); 0 otherwise.
int fixed_order(Family f) noexcept;

/// Compact form used wherever a tournament may be named inline: a family
/// letter followed by its order ("w7", "t5", "tr4", "e8"), or one of the
/// fixed names p7 b6 c3 d4 d4d.
FamilySpec parse_family_spec(std::string_view spec);

}
