#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <vector>

namespace forcinglab {

using Vertex = int;

/// Upper bound on graph order; every vertex set is a single 64-bit word.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs) insert(v);
    }
    template <class Range>
    static VertexSet of(const Range& r) {
        VertexSet s;
        for (Vertex v : r) s.insert(v);
        return s;
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet prefix(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    /// Smallest member; undefined on the empty set.
    constexpr Vertex first() const { return std::countr_zero(bits_); }

    void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    /// Orders by (size, lexicographic member list), the solver tie-break order.
    friend bool operator<(VertexSet a, VertexSet b);

private:
    std::uint64_t bits_ = 0;
};

inline bool operator<(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // Lexicographically smaller member list: the lowest differing element belongs to a.
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() >> std::countr_zero(diff)) & 1U;
}

std::ostream& operator<<(std::ostream& os, VertexSet s);

}  // namespace forcinglab
