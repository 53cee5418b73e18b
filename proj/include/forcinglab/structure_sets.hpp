#pragma once

#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

/// Cut-vertex classes and pendant-path bases that constrain every connected
/// forcing set of a connected non-path graph.
struct StructuralSets {
    VertexSet r1;  // comp(G - v) = 2, p(v) = 1
    VertexSet r2;  // comp(G - v) = 2, p(v) = 0
    VertexSet r3;  // comp(G - v) >= 3
    /// All-but-one bases at every vertex; the excluded base is the one with
    /// the smallest index.
    VertexSet script_l;
    VertexSet m;  // r2 | r3 | script_l
    std::vector<std::vector<Vertex>> bases_by_vertex;
    /// The sets are still computed for paths, but the containment results
    /// built on them do not apply.
    bool is_path = false;
};

/// Throws PreconditionError on disconnected input.
StructuralSets structural_sets(const Graph& g);

/// Choice-free form of the containment result: every connected forcing set
/// contains `required` and all but at most one member of each choice group.
struct MandatoryVertices {
    VertexSet required;
    std::vector<std::vector<Vertex>> choice_groups;

    /// Whether `s` meets the contract.
    bool admits(VertexSet s) const;
};

/// Throws PreconditionError on disconnected input or paths.
MandatoryVertices mandatory_vertices(const Graph& g);

}  // namespace forcinglab
