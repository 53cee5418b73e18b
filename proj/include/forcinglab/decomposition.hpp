#pragma once

#include <map>
#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

/// Connected components, each as a vertex set, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);
/// Components of G[S].
std::vector<VertexSet> components_within(const Graph& g, VertexSet s);
/// comp(G - removed)
int component_count_without(const Graph& g, VertexSet removed);

struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    /// block index -> cut vertices of G lying in that block
    std::vector<VertexSet> block_cuts;

    bool is_trivial(std::size_t b) const { return blocks[b].size() == 2; }
    /// Outer blocks contain at most one cut vertex of G.
    bool is_outer(std::size_t b) const { return block_cuts[b].size() <= 1; }
    std::vector<std::size_t> blocks_containing(Vertex v) const;
};

/// Throws PreconditionError on disconnected input.
BlockDecomposition block_decomposition(const Graph& g);

/// kappa(G): 0 when disconnected, n-1 for K_n.
int vertex_connectivity(const Graph& g);

/// Every vertex set of size kappa(G) whose removal disconnects g.
/// Throws PreconditionError on complete or disconnected input.
std::vector<VertexSet> minimum_separating_sets(const Graph& g);

struct PendantPath {
    VertexSet vertices;
    Vertex base;  // the neighbor of the attachment vertex inside the path
};

struct PendantStructure {
    VertexSet leaves;
    /// pendant_paths[v]: pendant paths attached to v, ordered by base.
    std::vector<std::vector<PendantPath>> pendant_paths;
    /// pendant_trees[v]: union of the tree components of G - v having a single
    /// vertex adjacent to v.
    std::vector<VertexSet> pendant_trees;

    int p(Vertex v) const { return static_cast<int>(pendant_paths[v].size()); }
};

/// Throws PreconditionError on disconnected input.
PendantStructure pendant_structure(const Graph& g);

/// Whether G[S] is a path (P_1 included); on success `order` lists S end to end.
bool induces_path(const Graph& g, VertexSet s, std::vector<Vertex>* order = nullptr);
bool is_path_graph(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);

}  // namespace forcinglab
