#include <doctest.h>

#include <random>

#include "forcinglab/decomposition.hpp"
#include "forcinglab/enumerate.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/forcing.hpp"
#include "oracles.hpp"

using namespace forcinglab;

namespace {

VertexSet from_bools(const std::vector<bool>& b) {
    VertexSet s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i]) s.insert(static_cast<Vertex>(i));
    }
    return s;
}

VertexSet oracle_derived(const Graph& g, VertexSet s) {
    return from_bools(oracle::derived(oracle::matrix_of(g), oracle::mask_to_bools(s.bits(), g.order())));
}

}  // namespace

TEST_CASE("derived set examples") {
    CHECK(derived_set(graphs::path(3), VertexSet{1}).colored == VertexSet{1});
    const DerivedSet p5 = derived_set(graphs::path(5), VertexSet{0});
    CHECK(p5.colored == graphs::path(5).vertices());
    REQUIRE(p5.log.forces.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(p5.log.forces[i].forcer == i);
        CHECK(p5.log.forces[i].forced == i + 1);
        CHECK(p5.log.forces[i].step == i + 1);
    }
    CHECK(derived_set(graphs::cycle(4), VertexSet{2}).colored == VertexSet{2});
    CHECK(derived_set(graphs::empty(3), VertexSet{}).colored.empty());
}

TEST_CASE("derived sets match the naive oracle") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 2000; ++i) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(rng, n, 0.3);
        const VertexSet s(rng() & VertexSet::prefix(n).bits());
        const VertexSet expected = oracle_derived(g, s);
        const DerivedSet d = derived_set(g, s);
        REQUIRE(d.colored == expected);
        CHECK(closure(g, s) == expected);
        CHECK(derived_set_random_schedule(g, s, rng()).colored == expected);
        CHECK(d.log.colored() == expected);
        CHECK_FALSE(validate_force_log(g, d.log).has_value());
        CHECK_FALSE(validate_force_log(g, derived_set_random_schedule(g, s, rng()).log).has_value());
    }
}

TEST_CASE("forcing set predicates") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(is_zero_forcing_set(graphs::path(n), VertexSet{0}));
        CHECK(is_zero_forcing_set(graphs::path(n), VertexSet{n - 1}));
        CHECK_FALSE(is_zero_forcing_set(graphs::path(n), VertexSet{}));
    }
    // C6 drawn as two parallel paths 0-1-2 and 5-4-3: both ends force.
    const Graph c6 = graphs::cycle(6);
    CHECK(is_zero_forcing_set(c6, VertexSet{0, 5}));
    CHECK(is_zero_forcing_set(c6, VertexSet{2, 3}));
    const Graph p5 = graphs::path(5);
    CHECK(is_zero_forcing_set(p5, VertexSet{0, 4}));
    CHECK_FALSE(is_connected_forcing_set(p5, VertexSet{0, 4}));
    CHECK(is_connected_forcing_set(p5, VertexSet{0}));
    CHECK_FALSE(is_connected_forcing_set(p5, VertexSet{}));
    const Graph k4 = graphs::complete(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(is_connected_forcing_set(k4, k4.vertices() - VertexSet{v}));
}

TEST_CASE("force log validation rejects bad logs") {
    const Graph p4 = graphs::path(4);
    ForceLog log = derived_set(p4, VertexSet{0}).log;
    CHECK_FALSE(validate_force_log(p4, log).has_value());

    ForceLog skip = log;
    skip.forces.erase(skip.forces.begin());  // 1 forces 2 while uncolored
    CHECK(validate_force_log(p4, skip).has_value());

    ForceLog twice = derived_set(graphs::path(3), VertexSet{1}).log;
    twice.initial = VertexSet{0};
    twice.order = 3;
    twice.forces = {{1, 0, 1}, {2, 1, 2}, {3, 0, 1}};
    CHECK(validate_force_log(graphs::path(3), twice).has_value());

    ForceLog ambiguous;
    ambiguous.order = 3;
    ambiguous.initial = VertexSet{1};
    ambiguous.forces = {{1, 1, 0}};  // 1 has two uncolored neighbors
    CHECK(validate_force_log(graphs::path(3), ambiguous).has_value());
}

TEST_CASE("forcing chains") {
    const ForcingChains p5 = forcing_chains(derived_set(graphs::path(5), VertexSet{0}).log);
    REQUIRE(p5.chains.size() == 1);
    CHECK(p5.chains[0] == std::vector<Vertex>{0, 1, 2, 3, 4});

    const ForcingChains c4 = forcing_chains(derived_set(graphs::cycle(4), VertexSet{0, 1}).log);
    REQUIRE(c4.chains.size() == 2);
    for (const auto& chain : c4.chains) CHECK(chain.size() == 2);

    const Graph star = graphs::star(3);
    const ForcingChains s = forcing_chains(derived_set(star, VertexSet{0, 1, 2}).log);
    REQUIRE(s.chains.size() == 3);
    std::size_t singletons = 0;
    for (const auto& chain : s.chains) singletons += chain.size() == 1 ? 1 : 0;
    CHECK(singletons == 2);

    CHECK_THROWS_AS(forcing_chains(derived_set(graphs::cycle(4), VertexSet{0}).log), PreconditionError);
}

TEST_CASE("forcing chains form a path cover") {
    std::mt19937_64 rng(99);
    int covered = 0;
    for (int i = 0; i < 1500; ++i) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n, 0.35);
        const VertexSet s(rng() & VertexSet::prefix(n).bits());
        const DerivedSet d = derived_set(g, s);
        if (d.colored != g.vertices()) continue;
        ++covered;
        const ForcingChains fc = forcing_chains(d.log);
        CHECK(static_cast<int>(fc.chains.size()) == s.size());
        VertexSet seen;
        for (const auto& chain : fc.chains) {
            CHECK(s.contains(chain.front()));
            for (Vertex v : chain) {
                CHECK_FALSE(seen.contains(v));
                seen.insert(v);
            }
            CHECK(induces_path(g, VertexSet::of(chain)));
        }
        CHECK(seen == g.vertices());
    }
    CHECK(covered > 100);
}
