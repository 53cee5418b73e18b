#include "forcinglab/structure_sets.hpp"

#include "forcinglab/decomposition.hpp"
#include "forcinglab/errors.hpp"

namespace forcinglab {

StructuralSets structural_sets(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) throw PreconditionError("structural_sets: graph must be connected");
    const PendantStructure ps = pendant_structure(g);
    StructuralSets out;
    out.is_path = is_path_graph(g);
    out.bases_by_vertex.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        const int comps = component_count_without(g, VertexSet::single(v));
        const int p = ps.p(v);
        if (comps == 2 && p == 1) out.r1.insert(v);
        if (comps == 2 && p == 0) out.r2.insert(v);
        if (comps >= 3) out.r3.insert(v);
        for (const PendantPath& path : ps.pendant_paths[v]) out.bases_by_vertex[v].push_back(path.base);
        // Bases are sorted, so skipping the first excludes the smallest index.
        for (std::size_t i = 1; i < out.bases_by_vertex[v].size(); ++i) {
            out.script_l.insert(out.bases_by_vertex[v][i]);
        }
    }
    out.m = out.r2 | out.r3 | out.script_l;
    return out;
}

bool MandatoryVertices::admits(VertexSet s) const {
    if (!required.is_subset_of(s)) return false;
    for (const auto& group : choice_groups) {
        int missing = 0;
        for (Vertex b : group) missing += s.contains(b) ? 0 : 1;
        if (missing > 1) return false;
    }
    return true;
}

MandatoryVertices mandatory_vertices(const Graph& g) {
    const StructuralSets sets = structural_sets(g);
    if (sets.is_path) throw PreconditionError("mandatory_vertices: graph is a path");
    MandatoryVertices out;
    out.required = sets.r2 | sets.r3;
    for (const auto& bases : sets.bases_by_vertex) {
        if (!bases.empty()) out.choice_groups.push_back(bases);
    }
    return out;
}

}  // namespace forcinglab
