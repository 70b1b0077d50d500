#pragma once

#include <tourney/tournament.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tourney {

/**
 * The least row-major upper-triangle bit string of a tournament over all of
 * its relabellings. Two tournaments are isomorphic iff their codes are equal;
 * codes order first by vertex count, then lexicographically.
 */
class CanonicalCode {
public:
    CanonicalCode() = default;
    CanonicalCode(int n, std::vector<std::uint64_t> rows) : n_(n), rows_(std::move(rows)) {}

    int order() const noexcept { return n_; }
    std::span<const std::uint64_t> rows() const noexcept { return rows_; }

    /// Same text format as to_code: the canonical tournament's code.
    std::string to_string() const;
    /// The tournament in canonical labelling.
    Tournament tournament() const;

    /// All rows in a single word, for n <= 11.
    std::optional<std::uint64_t> packed() const;
    static CanonicalCode from_packed(int n, std::uint64_t key);

    bool operator==(const CanonicalCode &) const = default;
    auto operator<=>(const CanonicalCode &) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct CanonicalForm {
    CanonicalCode code;
    /// labelling[i] is the vertex of the input placed at canonical position i.
    std::vector<int> labelling;
    std::uint64_t automorphisms = 0;
};

CanonicalForm canonical_form(const Tournament & t);
CanonicalCode canonical_code(const Tournament & t);
std::uint64_t automorphism_count(const Tournament & t);

bool are_isomorphic(const Tournament & a, const Tournament & b);
/// An isomorphism f from a onto b (b.beats(f[x], f[y]) == a.beats(x, y)), if any.
std::optional<std::vector<int>> find_isomorphism(const Tournament & a, const Tournament & b);

}
