#include "forcinglab/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

#include "forcinglab/errors.hpp"
#include "forcinglab/graph6.hpp"

namespace forcinglab {

namespace {

/// Equitable color refinement starting from degrees. Colors are ranks of
/// signatures, so the final coloring is invariant under relabeling.
std::vector<int> refine_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int r = 0;
        for (auto& [s, id] : rank) id = r++;
        for (int v = 0; v < n; ++v) color[v] = rank[sig[v]];
        if (r == classes) break;
        classes = r;
    }
    return color;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> slot_color;  // required color of each position
    std::vector<int> color;
    std::array<Vertex, kMaxVertices> placed{};
    std::array<Vertex, kMaxVertices> best_placed{};
    std::uint64_t best_key = 0;
    bool have_best = false;

    // `key` holds the bits of columns 1..pos-1 (MSB-first), `len` their count.
    // `ahead` means the prefix is already strictly smaller than best's.
    void run(int pos, VertexSet used, std::uint64_t key, int len, bool ahead) {
        if (pos == n) {
            if (!have_best || key < best_key) {
                best_key = key;
                best_placed = placed;
                have_best = true;
            }
            return;
        }
        const int total = n * (n - 1) / 2;
        for (Vertex v = 0; v < n; ++v) {
            if (used.contains(v) || color[v] != slot_color[pos]) continue;
            std::uint64_t k = key;
            for (int i = 0; i < pos; ++i) k = (k << 1) | (g.adjacent(placed[i], v) ? 1U : 0U);
            const int l = len + pos;
            bool now_ahead = ahead;
            if (have_best && !ahead) {
                const std::uint64_t best_prefix = l == 0 ? 0 : best_key >> (total - l);
                if (k > best_prefix) continue;
                now_ahead = k < best_prefix;
            }
            placed[pos] = v;
            VertexSet u = used;
            u.insert(v);
            run(pos + 1, u, k, l, now_ahead);
        }
    }
};

std::vector<int> canonical_permutation(const Graph& g) {
    const int n = g.order();
    if (n > kCanonicalMaxOrder) {
        throw UnsupportedSize("canonical labeling supports at most " + std::to_string(kCanonicalMaxOrder) +
                              " vertices, got " + std::to_string(n));
    }
    CanonSearch search{g, n, {}, refine_colors(g)};
    search.slot_color = search.color;
    std::sort(search.slot_color.begin(), search.slot_color.end());
    search.run(0, VertexSet{}, 0, 0, false);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) perm[search.best_placed[pos]] = pos;
    return perm;
}

}  // namespace

Graph canonical_form(const Graph& g) {
    const std::vector<int> perm = canonical_permutation(g);
    return relabel(g, perm);
}

CanonicalLabel canonical_label(const Graph& g) { return CanonicalLabel(write_graph6(canonical_form(g))); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_label(a) == canonical_label(b);
}

std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& h) {
    const int k = h.order();
    if (k > g.order()) return std::nullopt;
    std::vector<Vertex> map(static_cast<std::size_t>(k));
    VertexSet used;
    auto extend = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (used.contains(v) || g.degree(v) < h.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = g.adjacent(map[j], v) == h.adjacent(j, i);
            if (!ok) continue;
            map[i] = v;
            used.insert(v);
            if (self(self, i + 1)) return true;
            used.erase(v);
        }
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;
    return map;
}

}  // namespace forcinglab
