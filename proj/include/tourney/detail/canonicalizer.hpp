#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tourney::detail {

/**
 * Computes the lexicographically least row-major upper-triangle code of a
 * tournament over all relabellings.
 *
 * The search builds the relabelling one position at a time. Placing vertex v
 * at position d fixes row d of the code; the unplaced vertices sit in an
 * ordered partition (cells) by their relation to the already placed ones, and
 * row d is the concatenation, cell by cell, of 0s for v's in-neighbours then
 * 1s for its out-neighbours. Only candidates giving the least row survive,
 * and a branch is cut as soon as its prefix exceeds the incumbent.
 *
 * Every optimal leaf is visited, so the number of optimal leaves is the order
 * of the automorphism group, and the set of vertices placed last across them
 * is one orbit of that group.
 *
 * Reusable: buffers are kept between calls so hot loops do not allocate.
 */
class Canonicalizer {
public:
    /// out[v] is the bitmask of vertices v beats; out.size() <= 64.
    void run(std::span<const std::uint64_t> out);

    int order() const noexcept { return n_; }
    /// rows()[d] holds the n-1-d bits of row d, column d+1 in the top bit.
    std::span<const std::uint64_t> rows() const noexcept { return {best_rows_.data(), static_cast<std::size_t>(n_)}; }
    /// labelling()[i] is the input vertex placed at canonical position i.
    std::span<const int> labelling() const noexcept { return {best_perm_.data(), static_cast<std::size_t>(n_)}; }
    std::uint64_t automorphisms() const noexcept { return automorphisms_; }
    /// Orbit (bitmask of input vertices) of the vertex at the last position.
    std::uint64_t last_orbit() const noexcept { return last_orbit_; }

    /// Rows packed into one word; requires n <= 11.
    std::uint64_t packed() const noexcept;

private:
    void search(int depth, bool equal);

    int n_ = 0;
    const std::uint64_t * out_ = nullptr;
    std::vector<std::uint64_t> cells_;
    std::vector<int> cell_count_;
    std::vector<std::uint64_t> cur_rows_, best_rows_;
    std::vector<int> cur_perm_, best_perm_;
    bool have_best_ = false;
    std::uint64_t automorphisms_ = 0;
    std::uint64_t last_orbit_ = 0;
};

/// Inverse of Canonicalizer::packed.
std::vector<std::uint64_t> unpack_rows(int n, std::uint64_t key);
/// Out-neighbour masks of the tournament whose upper triangle is `rows`.
std::vector<std::uint64_t> masks_from_rows(int n, std::span<const std::uint64_t> rows);

}
