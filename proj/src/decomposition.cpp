#include "forcinglab/decomposition.hpp"

#include <algorithm>
#include <functional>

#include "forcinglab/errors.hpp"
#include "forcinglab/subsets.hpp"

namespace forcinglab {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (g.order() == 0 || !is_connected(g)) {
        throw PreconditionError(std::string(who) + ": graph must be connected");
    }
}

}  // namespace

std::vector<VertexSet> components_within(const Graph& g, VertexSet s) {
    std::vector<VertexSet> out;
    VertexSet rest = s;
    while (!rest.empty()) {
        VertexSet comp = VertexSet::single(rest.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            next = (next & rest) - comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

int component_count_without(const Graph& g, VertexSet removed) {
    return static_cast<int>(components_within(g, g.vertices() - removed).size());
}

std::vector<std::size_t> BlockDecomposition::blocks_containing(Vertex v) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].contains(v)) out.push_back(b);
    }
    return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
    require_connected(g, "block_decomposition");
    const int n = g.order();
    BlockDecomposition out;
    if (n == 1) {
        out.blocks.push_back(VertexSet::single(0));
        out.block_cuts.emplace_back();
        return out;
    }
    // Tarjan's biconnected components with an edge stack.
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    int timer = 0;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (Vertex w : g.neighbors(u)) {
            if (disc[w] == -1) {
                ++children;
                stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if ((parent == -1 && children > 1) || (parent != -1 && low[w] >= disc[u])) {
                    out.cut_vertices.insert(u);
                }
                if (low[w] >= disc[u]) {
                    VertexSet block;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.insert(e.first);
                        block.insert(e.second);
                        if (e == Edge{u, w}) break;
                    }
                    out.blocks.push_back(block);
                }
            } else if (w != parent && disc[w] < disc[u]) {
                stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    dfs(0, -1);
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    for (VertexSet b : out.blocks) out.block_cuts.push_back(b & out.cut_vertices);
    return out;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 0 || !is_connected(g)) return 0;
    if (is_complete(g)) return n - 1;
    // kappa <= delta for non-complete graphs, so sizes up to delta suffice.
    for (int k = 1; k <= g.min_degree(); ++k) {
        bool found = false;
        for_each_subset(g.vertices(), k, [&](VertexSet s) {
            if (component_count_without(g, s) >= 2) found = true;
            return !found;
        });
        if (found) return k;
    }
    return g.min_degree();
}

std::vector<VertexSet> minimum_separating_sets(const Graph& g) {
    require_connected(g, "minimum_separating_sets");
    if (is_complete(g)) throw PreconditionError("minimum_separating_sets: complete graph has no separating set");
    const int k = vertex_connectivity(g);
    std::vector<VertexSet> out;
    for_each_subset(g.vertices(), k, [&](VertexSet s) {
        if (component_count_without(g, s) >= 2) out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return out;
}

bool induces_path(const Graph& g, VertexSet s, std::vector<Vertex>* order) {
    if (s.empty() || !induces_connected(g, s)) return false;
    int ends = 0;
    Vertex start = s.first();
    int edge_ends = 0;
    for (Vertex v : s) {
        const int d = (g.neighbors(v) & s).size();
        if (d > 2) return false;
        edge_ends += d;
        if (d <= 1) {
            if (ends == 0) start = v;
            ++ends;
        }
    }
    if (edge_ends / 2 != s.size() - 1) return false;
    if (order) {
        order->clear();
        Vertex prev = -1, cur = start;
        while (true) {
            order->push_back(cur);
            VertexSet next = (g.neighbors(cur) & s) - VertexSet::single(cur);
            if (prev >= 0) next.erase(prev);
            if (next.empty()) break;
            prev = cur;
            cur = next.first();
        }
    }
    return true;
}

bool is_path_graph(const Graph& g) { return g.order() > 0 && induces_path(g, g.vertices()); }

bool is_tree(const Graph& g) { return g.order() > 0 && is_connected(g) && g.size() == g.order() - 1; }

bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s) {
        if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_complete(const Graph& g) { return is_clique(g, g.vertices()); }

bool is_independent(const Graph& g, VertexSet s) {
    for (Vertex v : s) {
        if (g.neighbors(v).intersects(s)) return false;
    }
    return true;
}

PendantStructure pendant_structure(const Graph& g) {
    require_connected(g, "pendant_structure");
    const int n = g.order();
    PendantStructure out;
    out.pendant_paths.resize(static_cast<std::size_t>(n));
    out.pendant_trees.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 1) out.leaves.insert(v);
        for (VertexSet comp : components_within(g, g.vertices() - VertexSet::single(v))) {
            const VertexSet touch = comp & g.neighbors(v);
            if (touch.size() != 1) continue;
            const Vertex base = touch.first();
            const bool tree = induces_connected(g, comp) && [&] {
                int twice = 0;
                for (Vertex w : comp) twice += (g.neighbors(w) & comp).size();
                return twice / 2 == comp.size() - 1;
            }();
            if (tree) out.pendant_trees[v] |= comp;
            if (induces_path(g, comp) && (g.neighbors(base) & comp).size() <= 1) {
                out.pendant_paths[v].push_back({comp, base});
            }
        }
        std::sort(out.pendant_paths[v].begin(), out.pendant_paths[v].end(),
                  [](const PendantPath& a, const PendantPath& b) { return a.base < b.base; });
    }
    return out;
}

}  // namespace forcinglab
