#pragma once

#include <tourney/tournament.hpp>
#include <tourney/vertex_set.hpp>

#include <utility>
#include <vector>

namespace tourney {

/// Largest order accepted by the subset-scan interval enumeration.
inline constexpr int max_scan_order = 16;

struct IntervalSet {
    /// Ascending by size, then by bitmask.
    std::vector<VertexSet> intervals;
    bool includes_trivial = false;
    int order = 0;

    bool trivial_only() const;
    std::size_t size() const noexcept { return intervals.size(); }
};

/// I is an interval of T: every vertex outside I beats all of I or loses to all of I.
bool is_interval(const Tournament & t, VertexSet interval);
/// I is an interval of the subtournament T(within); I must lie inside `within`.
bool is_interval(const Tournament & t, VertexSet interval, VertexSet within);

/// Inclusion-minimal interval containing `seed` (|seed| >= 2), grown by
/// repeatedly absorbing every outside vertex that splits the current set.
VertexSet smallest_interval_containing(const Tournament & t, VertexSet seed);
VertexSet smallest_interval_containing(const Tournament & t, VertexSet seed, VertexSet within);

/// Every interval with 2 <= |I| <= n-1 (plus the trivial ones on request),
/// found by scanning all subsets. Throws TooLarge above max_scan_order.
IntervalSet nontrivial_intervals(const Tournament & t, bool include_trivial = false);

/// Pair-closure test: for n >= 3, T is decomposable iff some pair closes to a
/// proper subset. Tournaments on at most 2 vertices are indecomposable.
bool is_indecomposable(const Tournament & t);
/// Same, for T(within), without materialising the subtournament.
bool is_indecomposable(const Tournament & t, VertexSet within);
/// Subset-scan engine, kept as a slow independent route (n <= max_scan_order).
bool is_indecomposable_by_scan(const Tournament & t);

/// Indecomposable, n > 1, and T - x decomposable for every x.
bool is_critical(const Tournament & t);

/// Some k-subset X has T(X) indecomposable.
bool has_indecomposable_subtournament(const Tournament & t, int k);

/**
 * Classification of V - X relative to a base X with |X| >= 3 and T(X)
 * indecomposable. Each part is computed from its own defining condition, so
 * whether the parts really partition V - X is something callers can check.
 */
struct ExteriorPartition {
    VertexSet base;
    /// x with T(X + x) indecomposable.
    VertexSet ext;
    /// x with x -> X or X -> x.
    VertexSet bracket;
    /// per_vertex[u], u in X: x with {u, x} an interval of T(X + x). Empty for u not in X.
    std::vector<VertexSet> per_vertex;

    VertexSet part_of(int u) const { return per_vertex.at(u); }
    /// Union of every X(u).
    VertexSet all_per_vertex() const;
};

ExteriorPartition exterior_partition(const Tournament & t, VertexSet base);

/// For indecomposable T and T(X) with |X| >= 3, |V - X| >= 2: the first pair
/// x < y (ascending) of V - X with T(X + {x, y}) indecomposable.
std::pair<int, int> extend_indecomposable_by_two(const Tournament & t, VertexSet base);

/// For indecomposable T of even order >= 6: the least y != x with T - y indecomposable.
int removable_vertex(const Tournament & t, int x);

}
