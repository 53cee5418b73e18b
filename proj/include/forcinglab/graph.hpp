#pragma once

#include <span>
#include <utility>
#include <vector>

#include "forcinglab/vertex_set.hpp"

namespace forcinglab {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighborhoods are bitmasks, so adjacency tests are O(1) and the graph
/// order is bounded by kMaxVertices.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    /// Throws PreconditionError on loops or out-of-range endpoints and
    /// UnsupportedSize for n > 64. Duplicate edges are merged.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);
    /// Validates symmetry and irreflexivity.
    static Graph from_adjacency(std::vector<VertexSet> adj);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const;
    VertexSet vertices() const { return VertexSet::prefix(order()); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    int degree(Vertex v) const { return adj_[v].size(); }
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degree_sequence() const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

Graph complement(const Graph& g);
/// g2's vertices are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

/// G[S] together with the old-index -> new-index map (-1 for dropped vertices).
struct InducedSubgraph {
    Graph graph;
    std::vector<int> new_index;
    std::vector<Vertex> old_index;
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// g relabeled so that old vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// True iff G[S] is connected. The empty set is not connected.
bool induces_connected(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);

namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph complete_bipartite(int p, int q);
}  // namespace graphs

}  // namespace forcinglab
