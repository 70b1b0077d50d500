#pragma once

#include <tourney/vertex_set.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tourney {

inline constexpr int max_order = 64;

/**
 * A tournament on vertices 0..n-1. Each vertex stores the bitmask of the
 * vertices it beats; the constructor guarantees that for distinct x and y
 * exactly one of x->y, y->x holds and that no vertex beats itself.
 *
 * Values are immutable once built.
 */
class Tournament {
public:
    Tournament() = default;

    /// Validates completeness and antisymmetry.
    explicit Tournament(std::vector<std::uint64_t> out_masks);

    /// Builds the tournament in which, for i < j, i->j iff forward(i, j).
    template <typename F>
    static Tournament from_relation(int n, F && forward)
    {
        std::vector<std::uint64_t> out(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (forward(i, j))
                    out[i] |= std::uint64_t{1} << j;
                else
                    out[j] |= std::uint64_t{1} << i;
            }
        return Tournament(std::move(out), unchecked_tag{});
    }

    /// Skips validation; for masks that are correct by construction.
    static Tournament from_masks_unchecked(std::vector<std::uint64_t> out_masks)
    {
        return Tournament(std::move(out_masks), unchecked_tag{});
    }

    int order() const noexcept { return static_cast<int>(out_.size()); }
    VertexSet vertices() const noexcept { return VertexSet::range(order()); }

    /// Unchecked arc test; x != y, both in range.
    bool beats(int x, int y) const noexcept { return (out_[x] >> y) & 1; }
    VertexSet out_neighbours(int x) const noexcept { return VertexSet(out_[x]); }
    VertexSet in_neighbours(int x) const noexcept { return vertices() - VertexSet(out_[x]) - VertexSet::single(x); }

    std::span<const std::uint64_t> out_masks() const noexcept { return out_; }

    bool operator==(const Tournament &) const = default;
    auto operator<=>(const Tournament &) const = default;

private:
    struct unchecked_tag { };
    Tournament(std::vector<std::uint64_t> out_masks, unchecked_tag) : out_(std::move(out_masks)) {}

    std::vector<std::uint64_t> out_;
};

/// Builds a tournament from an explicit list of arcs (x, y) meaning x->y.
/// Every unordered pair must be oriented exactly once.
Tournament make_tournament(int n, std::span<const std::pair<int, int>> arcs);

/// Checked arc test: throws OutOfRange or SelfPair.
bool has_arc(const Tournament & t, int x, int y);

Tournament dual(const Tournament & t);

struct Subtournament {
    Tournament tournament;
    /// labels[i] is the vertex of the parent that became vertex i.
    std::vector<int> labels;
};

/// T(X), relabelled order-preservingly onto 0..|X|-1.
Subtournament subtournament(const Tournament & t, VertexSet x);

/// T - x.
Tournament remove_vertex(const Tournament & t, int x);

/// Applies the bijection `image` (vertex v becomes image[v]); the returned
/// tournament R satisfies R.beats(image[a], image[b]) == t.beats(a, b).
Tournament relabel(const Tournament & t, std::span<const int> image);

int score(const Tournament & t, int x);
/// Scores sorted ascending.
std::vector<int> score_sequence(const Tournament & t);
bool is_regular(const Tournament & t);
bool is_transitive(const Tournament & t);

/// "n:bits", bits row-major over pairs (i, j) with i < j, '1' iff i->j.
std::string to_code(const Tournament & t);
Tournament parse_code(std::string_view code);

/// Graphviz digraph with every arc drawn.
std::string to_dot(const Tournament & t, std::string_view name = "T");

}
