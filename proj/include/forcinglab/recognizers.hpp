#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

enum class Family {
    None,
    Path,              // Z_c = 1
    TwoParallelPaths,  // Z = 2
    Zc2Fig1,
    Zc2Fig2,
    ZcNMinus1Complete,
    ZcNMinus1Star,
    ZNMinus2,
    Hmr2Form,
    ZcNMinus2Fig4,
    ZcNMinus2Fig5,
    ZcNMinus2Fig6,
    ZcNMinus2Fig7,
    ZcNMinus2Fig8,
    ZcNMinus2Fig9,
};

std::string_view family_name(Family f);

/// Family-specific evidence. Not every field is used by every family.
struct Certificate {
    /// Sub-case within a family, e.g. "left" / "middle" / "right".
    std::string variant;
    /// A (connected) forcing set of the size the family predicts.
    std::optional<VertexSet> forcing_set;
    /// Ordered vertex sequences: the two parallel paths, a connecting path, ...
    std::vector<std::vector<Vertex>> paths;
    /// Named vertex sets: separator, cliques, leaf groups, join part, ...
    std::vector<std::pair<std::string, VertexSet>> parts;

    std::optional<VertexSet> part(std::string_view name) const;
};

struct RecognitionResult {
    Family family = Family::None;
    Certificate certificate;

    explicit operator bool() const { return family != Family::None; }
};

/// Connected with the degree sequence of a path (K_1 included).
RecognitionResult recognize_path(const Graph& g);

/// Not a path and some 2-set forces; the certificate carries the two forcing
/// chains of the first such 2-set as the parallel paths. None when
/// disconnected.
RecognitionResult recognize_two_parallel_paths(const Graph& g);

/// Z_c = 2 family, labeled from leaf positions in the parallel-path
/// specification. Throws PreconditionError on disconnected input.
RecognitionResult recognize_zc2(const Graph& g);

/// K_n with n >= 2 or K_{1,n-1} with n >= 4.
RecognitionResult recognize_zc_n_minus_1(const Graph& g);

struct ForbiddenMember {
    std::string name;
    Graph graph;
};

/// The five minimal forbidden induced subgraphs for Z(G) >= n-2:
/// P2+P3, fish, 3P2, dart, P4.
const std::vector<ForbiddenMember>& forbidden_family();

/// Free of every member of forbidden_family(). Any graph, connected or not.
bool recognize_z_ge_n_minus_2(const Graph& g);

/// Forbidden-free, not edgeless, and not a clique of order >= 2 plus isolates.
RecognitionResult recognize_z_n_minus_2(const Graph& g);

/// The complement is (disjoint cliques and complete bipartite graphs) joined
/// with K_r, where the K_r part is the maximal set of vertices universal in
/// the complement.
RecognitionResult recognize_hmr2_form(const Graph& g);

enum class SeparatorClass { Empty, CliquePlusIsolates, ZNMinus2NoIsolates, Other };

struct SeparatorClassification {
    SeparatorClass kind = SeparatorClass::Other;
    int isolates = 0;
};

/// Classifies G[S] for the kappa >= 2 families.
SeparatorClassification zc_subcase_z_of_separator(const Graph& separator);

/// Z_c = n-2 family, by vertex connectivity and block structure.
/// Throws PreconditionError on disconnected input.
RecognitionResult recognize_zc_n_minus_2(const Graph& g);

/// Re-checks a certificate from scratch: partitions, adjacency conditions
/// and the forcing witness. Returns a description of the first problem.
std::optional<std::string> validate_certificate(const Graph& g, const RecognitionResult& r);

}  // namespace forcinglab
