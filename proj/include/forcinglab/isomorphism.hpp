#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

/// Largest order canonical_label accepts.
inline constexpr int kCanonicalMaxOrder = 10;

/// Isomorphism-invariant encoding: equal labels iff isomorphic graphs.
///
/// The bytes are the graph6 text of the relabeling whose upper-triangle
/// adjacency bit string (graph6 column order) is lexicographically minimal.
class CanonicalLabel {
public:
    CanonicalLabel() = default;
    explicit CanonicalLabel(std::string bytes) : bytes_(std::move(bytes)) {}
    const std::string& bytes() const { return bytes_; }
    friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;

private:
    std::string bytes_;
};

/// Throws UnsupportedSize above kCanonicalMaxOrder.
CanonicalLabel canonical_label(const Graph& g);
/// The canonical relabeling itself (same limit).
Graph canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// An induced copy of h in g: witness[i] is the g-vertex playing h-vertex i.
std::optional<std::vector<Vertex>> find_induced(const Graph& g, const Graph& h);
inline bool contains_induced(const Graph& g, const Graph& h) { return find_induced(g, h).has_value(); }

}  // namespace forcinglab

template <>
struct std::hash<forcinglab::CanonicalLabel> {
    std::size_t operator()(const forcinglab::CanonicalLabel& l) const noexcept {
        return std::hash<std::string>{}(l.bytes());
    }
};
