#include "forcinglab/solvers.hpp"

#include <algorithm>
#include <optional>

#include "forcinglab/decomposition.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/forcing.hpp"
#include "forcinglab/structure_sets.hpp"
#include "forcinglab/subsets.hpp"

namespace forcinglab {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (g.order() == 0 || !is_connected(g)) {
        throw PreconditionError(std::string(who) + ": graph must be connected");
    }
}

// Smallest zero forcing set of one component `comp` of g.
SolveResult solve_component(const Graph& g, VertexSet comp, bool prune) {
    SolveResult out;
    int start = 1;
    if (prune) {
        int delta = kMaxVertices;
        for (Vertex v : comp) delta = std::min(delta, g.degree(v));
        start = std::max(1, delta);
    }
    for (int k = start; k <= comp.size(); ++k) {
        bool found = false;
        for_each_subset(comp, k, [&](VertexSet s) {
            ++out.explored;
            if (comp.is_subset_of(closure(g, s))) {
                out.value = k;
                out.witness = s;
                found = true;
            }
            return !found;
        });
        if (found) return out;
    }
    return out;
}

}  // namespace

SolveResult zero_forcing_number(const Graph& g, SolveOptions opt) {
    SolveResult out;
    for (VertexSet comp : components(g)) {
        const SolveResult part = solve_component(g, comp, opt.prune);
        out.value += part.value;
        out.witness |= part.witness;
        out.explored += part.explored;
    }
    return out;
}

SolveResult connected_forcing_number(const Graph& g, SolveOptions opt) {
    require_connected(g, "connected_forcing_number");
    const VertexSet all = g.vertices();
    SolveResult out;
    int start = 1;
    std::optional<MandatoryVertices> contract;
    if (opt.prune) {
        start = std::max(1, lower_bounds(g).zc_lower);
        if (!is_path_graph(g)) contract = mandatory_vertices(g);
    }
    for (int k = start; k <= g.order(); ++k) {
        bool found = false;
        for_each_connected_subset(g, all, k, [&](VertexSet s) {
            if (contract && !contract->admits(s)) return true;
            ++out.explored;
            if (closure(g, s) == all) {
                // Connected sets arrive grouped by root, so keep the (size, lex) minimum.
                if (!found || s < out.witness) out.witness = s;
                found = true;
            }
            return true;
        });
        if (found) {
            out.value = k;
            return out;
        }
    }
    return out;
}

SolveResult restrained_zc(const Graph& g, VertexSet s) {
    require_connected(g, "restrained_zc");
    if (!s.is_subset_of(g.vertices())) throw PreconditionError("restrained_zc: vertex out of range");
    const VertexSet all = g.vertices();
    SolveResult out;
    for (int k = std::max(1, s.size()); k <= g.order(); ++k) {
        bool found = false;
        for_each_connected_subset(g, all, k, [&](VertexSet c) {
            if (!s.is_subset_of(c)) return true;
            ++out.explored;
            if (closure(g, c) == all) {
                if (!found || c < out.witness) out.witness = c;
                found = true;
            }
            return true;
        });
        if (found) {
            out.value = k;
            return out;
        }
    }
    // Unreachable: V itself is a connected forcing set of a connected graph.
    throw Error("restrained_zc: no connected forcing superset found");
}

SolveResult restrained_z(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw PreconditionError("restrained_z: vertex out of range");
    const VertexSet all = g.vertices();
    const VertexSet rest = all - s;
    SolveResult out;
    for (int extra = 0; extra <= rest.size(); ++extra) {
        bool found = false;
        for_each_subset(rest, extra, [&](VertexSet add) {
            ++out.explored;
            if (closure(g, s | add) == all) {
                out.value = s.size() + extra;
                out.witness = s | add;
                found = true;
            }
            return !found;
        });
        if (found) return out;
    }
    return out;
}

SolveResult tree_connected_forcing(const Graph& g) {
    if (!is_tree(g)) throw PreconditionError("tree_connected_forcing: graph is not a tree");
    if (is_path_graph(g)) throw PreconditionError("tree_connected_forcing: graph is a path");
    const StructuralSets sets = structural_sets(g);
    return {sets.m.size(), sets.m, 0};
}

std::vector<VertexSet> all_minimum_connected_forcing_sets(const Graph& g) {
    require_connected(g, "all_minimum_connected_forcing_sets");
    const VertexSet all = g.vertices();
    for (int k = 1; k <= g.order(); ++k) {
        std::vector<VertexSet> found;
        for_each_connected_subset(g, all, k, [&](VertexSet s) {
            if (closure(g, s) == all) found.push_back(s);
            return true;
        });
        if (!found.empty()) {
            std::sort(found.begin(), found.end());
            return found;
        }
    }
    return {};
}

std::vector<VertexSet> all_minimum_zero_forcing_sets(const Graph& g) {
    const VertexSet all = g.vertices();
    for (int k = 0; k <= g.order(); ++k) {
        std::vector<VertexSet> found;
        for_each_subset(all, k, [&](VertexSet s) {
            if (closure(g, s) == all) found.push_back(s);
            return true;
        });
        if (!found.empty()) {
            std::sort(found.begin(), found.end());
            return found;
        }
    }
    return {};
}

Bounds lower_bounds(const Graph& g) {
    require_connected(g, "lower_bounds");
    Bounds out;
    out.delta_bound = g.min_degree();
    out.z_lower = std::max(1, out.delta_bound);
    out.zc_lower = out.z_lower;
    if (is_path_graph(g)) return out;

    const PendantStructure ps = pendant_structure(g);
    out.leaf_bound = ps.leaves.size();
    // Regions spanned by pendant paths together with their attachment vertex.
    std::vector<VertexSet> pendant_regions;
    for (Vertex v = 0; v < g.order(); ++v) {
        for (const PendantPath& p : ps.pendant_paths[v]) pendant_regions.push_back(p.vertices | VertexSet::single(v));
    }
    const BlockDecomposition bd = block_decomposition(g);
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        const VertexSet block = bd.blocks[b];
        const bool pendant_edge = bd.is_trivial(b) && std::any_of(pendant_regions.begin(), pendant_regions.end(),
                                                                  [&](VertexSet r) { return block.is_subset_of(r); });
        if (pendant_edge) continue;
        int quota = kMaxVertices;
        for (Vertex v : block) quota = std::min(quota, (g.neighbors(v) & block).size());
        out.block_bound.push_back({block, quota});
        out.zc_lower = std::max(out.zc_lower, quota);
    }
    out.zc_lower = std::max(out.zc_lower, out.leaf_bound);
    return out;
}

bool has_vertex_with_all_but_one_neighbor(const Graph& g, VertexSet s) {
    for (Vertex v : s) {
        if ((g.neighbors(v) - s).size() <= 1) return true;
    }
    return false;
}

}  // namespace forcinglab
