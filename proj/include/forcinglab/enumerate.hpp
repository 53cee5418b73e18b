#pragma once

#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

/// Built-in generator limits.
inline constexpr int kEnumerateMaxOrder = 8;
inline constexpr int kTreeMaxOrder = 16;

/// One representative per isomorphism class of graphs (connected or not) on
/// n vertices, 1 <= n <= kEnumerateMaxOrder, ordered by canonical label.
/// Representatives are in canonical form. Results are memoized.
const std::vector<Graph>& enumerate_graphs(int n);

/// enumerate_graphs(n) restricted to connected graphs.
std::vector<Graph> enumerate_connected(int n);

/// One representative per isomorphism class of trees on n vertices,
/// 1 <= n <= kTreeMaxOrder.
std::vector<Graph> enumerate_trees(int n);

}  // namespace forcinglab
