#pragma once

#include <cstdint>
#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t explored = 0;  // candidate sets simulated
};

struct SolveOptions {
    /// Start the size sweep at the proven lower bounds and skip connected
    /// candidates that break the mandatory-vertex contract. Turn off to get
    /// a plain exhaustive search (used as an independent oracle).
    bool prune = true;
};

/// Z(G). Disconnected graphs are solved per component and summed; the
/// witness is the union of per-component witnesses. Z of the null graph is 0.
SolveResult zero_forcing_number(const Graph& g, SolveOptions opt = {});

/// Z_c(G). Throws PreconditionError on disconnected input.
SolveResult connected_forcing_number(const Graph& g, SolveOptions opt = {});

/// Minimum connected forcing set containing s.
SolveResult restrained_zc(const Graph& g, VertexSet s);
/// Minimum zero forcing set containing s.
SolveResult restrained_z(const Graph& g, VertexSet s);

/// |M(G)| with M(G) as witness. Throws PreconditionError unless g is a tree
/// other than a path.
SolveResult tree_connected_forcing(const Graph& g);

/// Every minimum connected forcing set (no pruning).
std::vector<VertexSet> all_minimum_connected_forcing_sets(const Graph& g);
/// Every minimum zero forcing set (no pruning).
std::vector<VertexSet> all_minimum_zero_forcing_sets(const Graph& g);

struct BlockQuota {
    VertexSet block;
    int quota;  // delta(G[B])
};

struct Bounds {
    int leaf_bound = 0;   // |L(G)| for connected non-paths, else 0
    int delta_bound = 0;  // delta(G), a lower bound on Z and Z_c
    /// Blocks that are not a cut edge of a pendant path; connected non-paths only.
    std::vector<BlockQuota> block_bound;
    int z_lower = 0;   // lower bound on Z
    int zc_lower = 0;  // lower bound on Z_c
};

/// Throws PreconditionError on disconnected input.
Bounds lower_bounds(const Graph& g);

/// Some v in s has at most one neighbor outside s.
bool has_vertex_with_all_but_one_neighbor(const Graph& g, VertexSet s);

}  // namespace forcinglab
