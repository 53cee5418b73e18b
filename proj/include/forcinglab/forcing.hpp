#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forcinglab/graph.hpp"

namespace forcinglab {

/// u -> v at a time step (steps start at 1).
struct Force {
    int step;
    Vertex forcer;
    Vertex forced;
    friend bool operator==(const Force&, const Force&) = default;
};

/// Chronological list of forces starting from `initial`.
struct ForceLog {
    int order = 0;
    VertexSet initial;
    std::vector<Force> forces;

    /// initial plus every forced vertex.
    VertexSet colored() const;
};

struct DerivedSet {
    VertexSet colored;
    ForceLog log;
};

/// Applies the color change rule to a fixpoint in rounds: every force valid at
/// the start of a step is collected and applied in ascending (forcer, forced)
/// order, skipping forces invalidated earlier in the same step.
DerivedSet derived_set(const Graph& g, VertexSet s);

/// Same fixpoint, one force per step, chosen uniformly among those valid,
/// driven by `seed`.
DerivedSet derived_set_random_schedule(const Graph& g, VertexSet s, std::uint64_t seed);

/// Derived set without a log; the hot path of the solvers.
VertexSet closure(const Graph& g, VertexSet s);

bool is_zero_forcing_set(const Graph& g, VertexSet s);
/// S nonempty, G[S] connected and S zero forcing.
bool is_connected_forcing_set(const Graph& g, VertexSet s);

/// Replays `log` against g, checking every force's precondition (forcer
/// colored with the forced vertex as its unique uncolored neighbor) and that
/// no vertex forces or is forced twice. Returns an error description or
/// nullopt when the log is valid.
std::optional<std::string> validate_force_log(const Graph& g, const ForceLog& log);

struct ForcingChains {
    std::vector<std::vector<Vertex>> chains;
};

/// Chains follow the recorded forces; initial vertices that never force are
/// singleton chains. Throws PreconditionError when the log does not color
/// every vertex.
ForcingChains forcing_chains(const ForceLog& log);

}  // namespace forcinglab
