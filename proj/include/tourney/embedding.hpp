#pragma once

#include <tourney/canonical.hpp>
#include <tourney/tournament.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tourney {

/// image[i] is the host vertex that pattern vertex i maps to.
struct Embedding {
    std::vector<int> image;

    VertexSet vertices() const;
};

/// An induced copy of `pattern` inside `host`, found by backtracking over
/// injective maps that stay consistent on every placed pair.
std::optional<Embedding> find_embedding(const Tournament & pattern, const Tournament & host);
bool embeds(const Tournament & pattern, const Tournament & host);

/// D4 or its dual embeds.
bool contains_diamond(const Tournament & t);

/// Which of T5, U5, W5 embed. Meaningful for indecomposable hosts with at
/// least 5 vertices; on any other host these are just the raw embedding flags.
struct I5Profile {
    bool t5 = false;
    bool u5 = false;
    bool w5 = false;

    bool empty() const noexcept { return ! t5 && ! u5 && ! w5; }
    /// "{T5,U5}" style.
    std::string to_string() const;

    bool operator==(const I5Profile &) const = default;
};

I5Profile i5_profile(const Tournament & t);

/// Iso classes keyed by canonical code, each with one representative and the
/// number of inserted tournaments that fell into it.
class IsoClassSet {
public:
    struct Entry {
        Tournament representative;
        std::size_t multiplicity = 0;
    };

    /// Returns the class code.
    CanonicalCode insert(const Tournament & t);
    void insert(const CanonicalCode & code, const Tournament & representative);

    std::size_t size() const noexcept { return classes_.size(); }
    bool empty() const noexcept { return classes_.empty(); }
    bool contains(const CanonicalCode & code) const { return classes_.contains(code); }
    bool contains_isomorph_of(const Tournament & t) const { return contains(canonical_code(t)); }
    std::vector<CanonicalCode> codes() const;

    auto begin() const { return classes_.begin(); }
    auto end() const { return classes_.end(); }

private:
    std::map<CanonicalCode, Entry> classes_;
};

/// Iso classes of the indecomposable induced k-vertex subtournaments, scanning
/// k-subsets in ascending bitmask order. Needs 3 <= k <= n (BadK).
IsoClassSet indecomposable_subtournaments(const Tournament & t, int k);

/// For indecomposable T with n >= 7: every indecomposable 7-vertex
/// subtournament is isomorphic to the same one of T7, U7, W7.
bool criticality_by_seven(const Tournament & t);

}
