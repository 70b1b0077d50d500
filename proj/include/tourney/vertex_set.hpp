#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace tourney {

/**
 * A set of vertices drawn from 0..63, stored as a bitmask. Iteration visits
 * members in ascending order.
 */
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator & operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator &) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);

    static constexpr VertexSet range(int n) { return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1; }
    constexpr bool subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

    /// Smallest member; undefined on the empty set.
    constexpr int lowest() const noexcept { return std::countr_zero(bits_); }
    /// Largest member plus one; 0 for the empty set.
    constexpr int span() const noexcept { return 64 - std::countl_zero(bits_); }

    constexpr VertexSet & insert(int v) noexcept
    {
        bits_ |= std::uint64_t{1} << v;
        return *this;
    }
    constexpr VertexSet & erase(int v) noexcept
    {
        bits_ &= ~(std::uint64_t{1} << v);
        return *this;
    }

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ ^ b.bits_); }
    constexpr VertexSet & operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet & operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet & operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet &) const = default;
    constexpr auto operator<=>(const VertexSet &) const = default;

    std::vector<int> to_vector() const;
    /// "{0,2,5}"
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

/// Calls f(subset) for every k-element subset of `from`, in ascending order of
/// bitmask value. f returns bool; returning false stops the scan early and
/// makes the call return false.
template <typename F>
bool for_each_subset_of_size(VertexSet from, int k, F && f)
{
    const int n = from.size();
    if (k < 0 || k > n)
        return true;
    int members[64];
    int i = 0;
    for (int v : from)
        members[i++] = v;

    // Gosper's hack over positions within `from`, then scatter back.
    if (k == 0)
        return f(VertexSet{});
    std::uint64_t pick = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit_bit = (n == 64) ? 0 : (std::uint64_t{1} << n);
    while (true) {
        VertexSet subset;
        for (std::uint64_t rest = pick; rest; rest &= rest - 1)
            subset.insert(members[std::countr_zero(rest)]);
        if (! f(subset))
            return false;
        std::uint64_t lowest = pick & -pick;
        std::uint64_t ripple = pick + lowest;
        if (ripple == 0)
            break;
        pick = (((ripple ^ pick) >> 2) / lowest) | ripple;
        if (limit_bit != 0 && pick >= limit_bit)
            break;
    }
    return true;
}

}
