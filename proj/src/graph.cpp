#include "forcinglab/graph.hpp"

#include <algorithm>
#include <sstream>

#include "forcinglab/errors.hpp"

namespace forcinglab {

std::ostream& operator<<(std::ostream& os, VertexSet s) {
    os << '{';
    bool first = true;
    for (Vertex v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    return os << '}';
}

namespace {

void check_order(int n) {
    if (n < 0) throw PreconditionError("negative graph order");
    if (n > kMaxVertices) throw UnsupportedSize("graph order " + std::to_string(n) + " above 64");
}

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            std::ostringstream msg;
            msg << "edge (" << u << ',' << v << ") out of range for order " << n;
            throw PreconditionError(msg.str());
        }
        if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
        adj_[u].insert(v);
        adj_[v].insert(u);
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_adjacency(std::vector<VertexSet> adj) {
    const int n = static_cast<int>(adj.size());
    check_order(n);
    const VertexSet all = VertexSet::prefix(n);
    for (int v = 0; v < n; ++v) {
        if (!adj[v].is_subset_of(all)) throw PreconditionError("neighbor out of range");
        if (adj[v].contains(v)) throw PreconditionError("loop at vertex " + std::to_string(v));
        for (Vertex u : adj[v]) {
            if (!adj[u].contains(v)) throw PreconditionError("asymmetric adjacency");
        }
    }
    Graph g;
    g.adj_ = std::move(adj);
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (VertexSet s : adj_) twice += s.size();
    return twice / 2;
}

int Graph::min_degree() const {
    int d = order() == 0 ? 0 : kMaxVertices;
    for (VertexSet s : adj_) d = std::min(d, s.size());
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexSet s : adj_) d = std::max(d, s.size());
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (VertexSet s : adj_) out.push_back(s.size());
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    const VertexSet all = g.vertices();
    std::vector<VertexSet> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        adj[v] = all - g.neighbors(v) - VertexSet::single(v);
    }
    return Graph::from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int off = g1.order();
    std::vector<Edge> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + off, v + off);
    return Graph(off + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
    const int off = g1.order();
    std::vector<Edge> edges = disjoint_union(g1, g2).edges();
    for (int u = 0; u < g1.order(); ++u) {
        for (int v = 0; v < g2.order(); ++v) edges.emplace_back(u, v + off);
    }
    return Graph(off + g2.order(), edges);
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) {
        throw PreconditionError("induced_subgraph: vertex out of range");
    }
    InducedSubgraph out;
    out.new_index.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v : s) {
        out.new_index[v] = static_cast<int>(out.old_index.size());
        out.old_index.push_back(v);
    }
    std::vector<VertexSet> adj(out.old_index.size());
    for (std::size_t i = 0; i < out.old_index.size(); ++i) {
        for (Vertex w : g.neighbors(out.old_index[i]) & s) adj[i].insert(out.new_index[w]);
    }
    out.graph = Graph::from_adjacency(std::move(adj));
    return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        for (Vertex w : g.neighbors(v)) adj[perm[v]].insert(perm[w]);
    }
    return Graph::from_adjacency(std::move(adj));
}

bool induces_connected(const Graph& g, VertexSet s) {
    if (s.empty()) return false;
    VertexSet seen = VertexSet::single(s.first());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next = (next & s) - seen;
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

bool is_connected(const Graph& g) {
    return g.order() == 0 || induces_connected(g, g.vertices());
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n) { return complement(Graph(n)); }

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph star(int leaves) { return join(Graph(1), Graph(leaves)); }

Graph complete_bipartite(int p, int q) { return complement(disjoint_union(complete(p), complete(q))); }

}  // namespace graphs

}  // namespace forcinglab
