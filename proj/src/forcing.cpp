#include "forcinglab/forcing.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "forcinglab/errors.hpp"

namespace forcinglab {

VertexSet ForceLog::colored() const {
    VertexSet out = initial;
    for (const Force& f : forces) out.insert(f.forced);
    return out;
}

namespace {

void check_subset(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw PreconditionError("initial set has a vertex outside the graph");
}

}  // namespace

DerivedSet derived_set(const Graph& g, VertexSet s) {
    check_subset(g, s);
    DerivedSet out{s, {g.order(), s, {}}};
    VertexSet& colored = out.colored;
    for (int step = 1;; ++step) {
        std::vector<Force> round;
        for (Vertex u : colored) {
            const VertexSet open = g.neighbors(u) - colored;
            if (open.size() == 1) round.push_back({step, u, open.first()});
        }
        if (round.empty()) break;
        for (const Force& f : round) {
            // Another force this step may already have colored the target.
            if (colored.contains(f.forced)) continue;
            colored.insert(f.forced);
            out.log.forces.push_back(f);
        }
    }
    return out;
}

DerivedSet derived_set_random_schedule(const Graph& g, VertexSet s, std::uint64_t seed) {
    check_subset(g, s);
    std::mt19937_64 rng(seed);
    DerivedSet out{s, {g.order(), s, {}}};
    VertexSet& colored = out.colored;
    for (int step = 1;; ++step) {
        std::vector<Force> valid;
        for (Vertex u : colored) {
            const VertexSet open = g.neighbors(u) - colored;
            if (open.size() == 1) valid.push_back({step, u, open.first()});
        }
        if (valid.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
        const Force f = valid[pick(rng)];
        colored.insert(f.forced);
        out.log.forces.push_back(f);
    }
    return out;
}

VertexSet closure(const Graph& g, VertexSet s) {
    VertexSet colored = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex u : colored) {
            const VertexSet open = g.neighbors(u) - colored;
            if (open.size() == 1) {
                colored |= open;
                changed = true;
            }
        }
    }
    return colored;
}

bool is_zero_forcing_set(const Graph& g, VertexSet s) { return closure(g, s) == g.vertices(); }

bool is_connected_forcing_set(const Graph& g, VertexSet s) {
    return induces_connected(g, s) && is_zero_forcing_set(g, s);
}

std::optional<std::string> validate_force_log(const Graph& g, const ForceLog& log) {
    if (log.order != g.order()) return "log order does not match graph";
    VertexSet colored = log.initial;
    VertexSet forcers;
    int last_step = 0;
    for (const Force& f : log.forces) {
        std::ostringstream where;
        where << "force " << f.forcer << "->" << f.forced << " at step " << f.step << ": ";
        if (f.step < last_step) return where.str() + "steps out of order";
        last_step = f.step;
        if (!colored.contains(f.forcer)) return where.str() + "forcer uncolored";
        if (colored.contains(f.forced)) return where.str() + "target already colored";
        if (forcers.contains(f.forcer)) return where.str() + "vertex forces twice";
        if (g.neighbors(f.forcer) - colored != VertexSet::single(f.forced)) {
            return where.str() + "target is not the unique uncolored neighbor";
        }
        colored.insert(f.forced);
        forcers.insert(f.forcer);
    }
    if (colored != closure(g, log.initial)) return "replay does not reach the derived set";
    return std::nullopt;
}

ForcingChains forcing_chains(const ForceLog& log) {
    if (log.colored() != VertexSet::prefix(log.order)) {
        throw PreconditionError("forcing_chains: initial set is not a zero forcing set");
    }
    std::vector<Vertex> next(static_cast<std::size_t>(log.order), -1);
    for (const Force& f : log.forces) next[f.forcer] = f.forced;
    ForcingChains out;
    for (Vertex start : log.initial) {
        std::vector<Vertex> chain{start};
        for (Vertex v = next[start]; v != -1; v = next[v]) chain.push_back(v);
        out.chains.push_back(std::move(chain));
    }
    return out;
}

}  // namespace forcinglab
