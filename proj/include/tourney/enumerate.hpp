#pragma once

#include <tourney/tournament.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace tourney {

inline constexpr int max_enumeration_order = 10;
/// Orders above this need EnumerateOptions::allow_big.
inline constexpr int default_enumeration_order = 9;

enum class Filter { all, indecomposable, critical };

std::string_view to_string(Filter f) noexcept;
bool passes(const Tournament & t, Filter f);

struct EnumerateOptions {
    /// Worker threads; 0 means one per available core.
    int jobs = 0;
    bool allow_big = false;
};

/**
 * Packed canonical codes (see CanonicalCode::packed) of every isomorphism
 * class of tournaments on n vertices, ascending.
 *
 * Generation is by canonical augmentation: each class on n-1 vertices gets a
 * new vertex n-1 in every one of the 2^(n-1) ways, and a child is kept only
 * when the new vertex lies in the automorphism orbit of the child's last
 * canonical vertex. Each class then arises from exactly one parent, so no
 * global dedup set is needed. The output does not depend on `jobs`.
 */
std::vector<std::uint64_t> canonical_keys(int n, const EnumerateOptions & options = {});

/// Streams canonical representatives in ascending code order.
class EnumerationCursor {
public:
    explicit EnumerationCursor(int n, Filter filter = Filter::all, const EnumerateOptions & options = {});

    std::optional<Tournament> next();

    int order() const noexcept { return n_; }
    Filter filter() const noexcept { return filter_; }
    /// Index into the unfiltered class list of the next candidate.
    std::size_t position() const noexcept { return position_; }
    std::size_t class_count() const noexcept { return keys_.size(); }

private:
    int n_;
    Filter filter_;
    std::vector<std::uint64_t> keys_;
    std::size_t position_ = 0;
};

std::vector<Tournament> all_tournaments(int n, const EnumerateOptions & options = {});
std::vector<Tournament> indecomposable_tournaments(int n, const EnumerateOptions & options = {});
std::vector<Tournament> critical_tournaments(int n, const EnumerateOptions & options = {});
std::size_t count_tournaments(int n, Filter filter = Filter::all, const EnumerateOptions & options = {});

/// The tournament with the given packed canonical code.
Tournament from_key(int n, std::uint64_t key);

}
