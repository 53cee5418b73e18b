#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "forcinglab/errors.hpp"
#include "forcinglab/graph.hpp"

namespace forcinglab {

/// Calls f(S) for every k-subset S of `pool` (Gosper order); f returns false
/// to stop. Returns false iff stopped early.
template <class F>
bool for_each_subset(VertexSet pool, int k, F&& f) {
    const std::vector<Vertex> items = pool.to_vector();
    const int m = static_cast<int>(items.size());
    if (k < 0 || k > m) return true;
    if (k == 0) return f(VertexSet{});
    if (m >= 63) throw UnsupportedSize("subset enumeration over 63 or more vertices");
    std::uint64_t pick = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (pick < limit) {
        VertexSet s;
        for (std::uint64_t r = pick; r; r &= r - 1) s.insert(items[std::countr_zero(r)]);
        if (!f(s)) return false;
        const std::uint64_t low = pick & (~pick + 1);
        const std::uint64_t ripple = pick + low;
        pick = (((ripple ^ pick) >> 2) / low) | ripple;
    }
    return true;
}

namespace detail {

// ESU-style extension: each connected set is produced exactly once, from its
// smallest vertex `root`.
template <class F>
bool extend_connected(const Graph& g, VertexSet allowed, int k, Vertex root, VertexSet current,
                      VertexSet extension, VertexSet blocked, F& f) {
    if (current.size() == k) return f(current);
    while (!extension.empty()) {
        const Vertex w = extension.first();
        extension.erase(w);
        VertexSet grown = current;
        grown.insert(w);
        // New candidates: neighbors of w not yet adjacent to / in the set and above root.
        VertexSet fresh = (g.neighbors(w) & allowed) - blocked - grown;
        VertexSet above;
        for (Vertex x : fresh) {
            if (x > root) above.insert(x);
        }
        if (!extend_connected(g, allowed, k, root, grown, extension | above, blocked | above | grown, f)) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

/// Calls f(S) for every connected S ⊆ allowed with |S| = k, each exactly once.
template <class F>
bool for_each_connected_subset(const Graph& g, VertexSet allowed, int k, F&& f) {
    if (k <= 0) return true;
    for (Vertex root : allowed) {
        VertexSet start = VertexSet::single(root);
        VertexSet ext;
        for (Vertex x : g.neighbors(root) & allowed) {
            if (x > root) ext.insert(x);
        }
        VertexSet blocked = start | (g.neighbors(root) & allowed);
        if (!detail::extend_connected(g, allowed, k, root, start, ext, blocked, f)) return false;
    }
    return true;
}

}  // namespace forcinglab
