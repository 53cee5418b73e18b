#include "forcinglab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "forcinglab/errors.hpp"
#include "forcinglab/graph6.hpp"
#include "forcinglab/isomorphism.hpp"

namespace forcinglab {

namespace {

void check_range(int n, int max, const char* what) {
    if (n < 1 || n > max) {
        throw UnsupportedSize(std::string(what) + ": order " + std::to_string(n) + " outside [1, " +
                              std::to_string(max) +
                              "]; use a graph6 corpus file for larger orders");
    }
}

Graph add_vertex(const Graph& g, VertexSet nbrs) {
    std::vector<Edge> e = g.edges();
    const int v = g.order();
    for (Vertex u : nbrs) e.emplace_back(u, v);
    return Graph(v + 1, e);
}

// Every graph on n vertices is some graph on n-1 vertices plus one vertex, so
// extending each class representative by every neighborhood reaches all classes.
std::vector<Graph> extend_classes(const std::vector<Graph>& smaller, int n) {
    std::map<CanonicalLabel, Graph> seen;
    for (const Graph& g : smaller) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            Graph c = canonical_form(add_vertex(g, VertexSet(mask)));
            CanonicalLabel label(write_graph6(c));
            seen.try_emplace(std::move(label), std::move(c));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [label, g] : seen) out.push_back(std::move(g));
    return out;
}

std::string ahu(const Graph& t, Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(v)) {
        if (w != parent) kids.push_back(ahu(t, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

std::string tree_code(const Graph& t) {
    VertexSet alive = t.vertices();
    while (alive.size() > 2) {
        VertexSet leaves;
        for (Vertex v : alive) {
            if ((t.neighbors(v) & alive).size() <= 1) leaves.insert(v);
        }
        alive -= leaves;
    }
    std::string best;
    for (Vertex c : alive) {
        std::string s = ahu(t, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

const std::vector<Graph>& enumerate_graphs(int n) {
    check_range(n, kEnumerateMaxOrder, "enumerate_graphs");
    static std::mutex mu;
    static std::vector<std::vector<Graph>> levels;
    std::lock_guard lock(mu);
    if (levels.empty()) levels.push_back({Graph(1)});
    while (static_cast<int>(levels.size()) < n) {
        levels.push_back(extend_classes(levels.back(), static_cast<int>(levels.size()) + 1));
    }
    return levels[n - 1];
}

std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    for (const Graph& g : enumerate_graphs(n)) {
        if (is_connected(g)) out.push_back(g);
    }
    return out;
}

std::vector<Graph> enumerate_trees(int n) {
    check_range(n, kTreeMaxOrder, "enumerate_trees");
    std::map<std::string, Graph> level{{tree_code(Graph(1)), Graph(1)}};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const auto& [code, t] : level) {
            for (Vertex v = 0; v < t.order(); ++v) {
                Graph grown = add_vertex(t, VertexSet::single(v));
                next.try_emplace(tree_code(grown), std::move(grown));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto& [code, t] : level) out.push_back(std::move(t));
    return out;
}

}  // namespace forcinglab
