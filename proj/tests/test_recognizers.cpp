#include <doctest.h>

#include "forcinglab/enumerate.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/forcing.hpp"
#include "forcinglab/graph6.hpp"
#include "forcinglab/isomorphism.hpp"
#include "forcinglab/recognizers.hpp"
#include "oracles.hpp"

using namespace forcinglab;

namespace {

void check_valid(const Graph& g, const RecognitionResult& r) {
    const auto problem = validate_certificate(g, r);
    INFO(write_graph6(g) << " " << family_name(r.family) << ": " << problem.value_or(""));
    CHECK_FALSE(problem.has_value());
}

Graph bull() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}); }

}  // namespace

TEST_CASE("path recognizer") {
    CHECK(recognize_path(graphs::path(7)).family == Family::Path);
    CHECK_FALSE(recognize_path(graphs::cycle(7)));
    CHECK(recognize_path(graphs::path(1)).family == Family::Path);
    CHECK_FALSE(recognize_path(disjoint_union(graphs::path(2), graphs::path(2))));
    check_valid(graphs::path(6), recognize_path(graphs::path(6)));
}

TEST_CASE("two parallel paths recognizer") {
    const RecognitionResult c5 = recognize_two_parallel_paths(graphs::cycle(5));
    REQUIRE(c5.family == Family::TwoParallelPaths);
    check_valid(graphs::cycle(5), c5);
    CHECK_FALSE(recognize_two_parallel_paths(graphs::path(6)));
    CHECK_FALSE(recognize_two_parallel_paths(graphs::complete(4)));
    CHECK_FALSE(recognize_two_parallel_paths(disjoint_union(graphs::path(2), graphs::path(3))));

    // C5 on 0..4 in cycle order, split as {0} and {1,2,3,4}.
    RecognitionResult split{Family::TwoParallelPaths, {}};
    split.certificate.paths = {{0}, {1, 2, 3, 4}};
    split.certificate.forcing_set = VertexSet{0, 1};
    check_valid(graphs::cycle(5), split);

    RecognitionResult crossing = split;
    crossing.certificate.paths = {{0, 2}, {1, 3, 4}};  // {0,2} is not an induced path
    CHECK(validate_certificate(graphs::cycle(5), crossing).has_value());
    RecognitionResult not_cover = split;
    not_cover.certificate.paths = {{0}, {1, 2, 3}};
    CHECK(validate_certificate(graphs::cycle(5), not_cover).has_value());
}

TEST_CASE("crossing edges break a standard drawing") {
    // Paths 0-1-2 and 3-4-5 with rungs 0-5, 1-4, 2-3: planar once 3-4-5 is reversed.
    const Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 5}, {2, 3}, {1, 4}});
    RecognitionResult r{Family::TwoParallelPaths, {}};
    r.certificate.paths = {{0, 1, 2}, {3, 4, 5}};
    r.certificate.forcing_set = VertexSet{0, 5};
    CHECK_FALSE(validate_certificate(g, r).has_value());
    // Adding 0-3 and 2-5 forces a crossing in both orientations.
    const Graph x(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 5}, {2, 3}, {0, 3}, {2, 5}});
    CHECK(validate_certificate(x, r).has_value());
}

TEST_CASE("connected forcing number 2") {
    const RecognitionResult c6 = recognize_zc2(graphs::cycle(6));
    CHECK(c6.family == Family::Zc2Fig1);
    CHECK(c6.certificate.variant == "no-leaves");
    check_valid(graphs::cycle(6), c6);

    const RecognitionResult b = recognize_zc2(bull());
    REQUIRE(b.family == Family::Zc2Fig2);
    check_valid(bull(), b);
    CHECK(oracle::brute_zc(bull()) == 2);
    CHECK(is_connected_forcing_set(bull(), *b.certificate.forcing_set));

    CHECK_FALSE(recognize_zc2(graphs::star(3)));
    CHECK_FALSE(recognize_zc2(graphs::path(5)));
    CHECK_THROWS_AS(recognize_zc2(graphs::empty(3)), PreconditionError);
}

TEST_CASE("connected forcing number n-1") {
    CHECK(recognize_zc_n_minus_1(graphs::complete(6)).family == Family::ZcNMinus1Complete);
    CHECK(recognize_zc_n_minus_1(graphs::star(3)).family == Family::ZcNMinus1Star);
    CHECK_FALSE(recognize_zc_n_minus_1(graphs::star(2)));
    CHECK_FALSE(recognize_zc_n_minus_1(graphs::complete(1)));
    check_valid(graphs::star(5), recognize_zc_n_minus_1(graphs::star(5)));
    check_valid(graphs::complete(2), recognize_zc_n_minus_1(graphs::complete(2)));
}

TEST_CASE("forbidden family is the derived minimal family") {
    const auto& family = forbidden_family();
    REQUIRE(family.size() == 5);
    std::vector<Graph> candidates;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) candidates.push_back(g);
    }
    const std::vector<Graph> derived = oracle::minimal_low_z(candidates);
    REQUIRE(derived.size() == 5);
    for (const Graph& d : derived) {
        int matches = 0;
        for (const auto& m : family) matches += oracle::brute_isomorphic(d, m.graph) ? 1 : 0;
        CHECK(matches == 1);
    }
    for (const auto& m : family) CHECK(oracle::brute_z(m.graph) == m.graph.order() - 3);
    CHECK(oracle::brute_z(family[4].graph) == 1);  // P4
    CHECK(oracle::brute_z(family[2].graph) == 3);  // 3P2
    CHECK(family[1].graph.degree_sequence().size() == 5);
    CHECK(family[3].graph.degree_sequence().size() == 5);
}

TEST_CASE("zero forcing number at least n-2") {
    for (int n = 1; n <= 6; ++n) CHECK(recognize_z_ge_n_minus_2(graphs::complete(n)));
    CHECK_FALSE(recognize_z_ge_n_minus_2(graphs::path(5)));
    CHECK(recognize_z_ge_n_minus_2(graphs::cycle(4)));

    CHECK_FALSE(recognize_z_n_minus_2(graphs::empty(5)));
    CHECK_FALSE(recognize_z_n_minus_2(disjoint_union(graphs::complete(4), graphs::complete(1))));
    CHECK(recognize_z_n_minus_2(graphs::cycle(4)).family == Family::ZNMinus2);

    CHECK(recognize_hmr2_form(graphs::empty(4)).family == Family::Hmr2Form);
    CHECK_FALSE(recognize_hmr2_form(graphs::path(4)));
    check_valid(graphs::empty(4), recognize_hmr2_form(graphs::empty(4)));
}

TEST_CASE("separator classification") {
    CHECK(zc_subcase_z_of_separator(graphs::empty(3)).kind == SeparatorClass::Empty);
    const SeparatorClassification k3k1 =
        zc_subcase_z_of_separator(disjoint_union(graphs::complete(3), graphs::complete(1)));
    CHECK(k3k1.kind == SeparatorClass::CliquePlusIsolates);
    CHECK(k3k1.isolates == 1);
    CHECK(zc_subcase_z_of_separator(graphs::cycle(4)).kind == SeparatorClass::ZNMinus2NoIsolates);
    CHECK(zc_subcase_z_of_separator(graphs::path(4)).kind == SeparatorClass::Other);
}

TEST_CASE("connected forcing number n-2 examples") {
    // Two K4 blocks joined through the path 3-8-4.
    std::vector<Edge> edges;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            edges.emplace_back(a, b);
            edges.emplace_back(a + 4, b + 4);
        }
    }
    edges.emplace_back(3, 8);
    edges.emplace_back(8, 4);
    const Graph fig4(9, edges);
    const RecognitionResult r4 = recognize_zc_n_minus_2(fig4);
    CHECK(r4.family == Family::ZcNMinus2Fig4);
    check_valid(fig4, r4);
    CHECK(oracle::brute_zc(fig4) == 7);

    const Graph double_star(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    const RecognitionResult r7 = recognize_zc_n_minus_2(double_star);
    CHECK(r7.family == Family::ZcNMinus2Fig7);
    check_valid(double_star, r7);

    const RecognitionResult k23 = recognize_zc_n_minus_2(graphs::complete_bipartite(2, 3));
    CHECK(k23.family == Family::ZcNMinus2Fig8);
    CHECK(k23.certificate.part("S") == VertexSet{0, 1});
    check_valid(graphs::complete_bipartite(2, 3), k23);

    const RecognitionResult p3 = recognize_zc_n_minus_2(graphs::path(3));
    CHECK(p3.family == Family::ZcNMinus2Fig7);
    CHECK(p3.certificate.variant == "P3");

    CHECK_FALSE(recognize_zc_n_minus_2(graphs::complete(5)));
    CHECK_FALSE(recognize_zc_n_minus_2(graphs::cycle(7)));
    CHECK_THROWS_AS(recognize_zc_n_minus_2(graphs::empty(4)), PreconditionError);
}

TEST_CASE("recognizers match the subset oracle on all connected graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            const int z = oracle::brute_z(g);
            const int zc = oracle::brute_zc(g);
            INFO(write_graph6(g));
            const RecognitionResult path = recognize_path(g);
            CHECK(static_cast<bool>(path) == (zc == 1));
            const RecognitionResult two = recognize_two_parallel_paths(g);
            CHECK(static_cast<bool>(two) == (z == 2));
            const RecognitionResult c2 = recognize_zc2(g);
            CHECK(static_cast<bool>(c2) == (zc == 2));
            const RecognitionResult c1 = recognize_zc_n_minus_1(g);
            CHECK(static_cast<bool>(c1) == (zc == n - 1));
            const RecognitionResult c_n2 = recognize_zc_n_minus_2(g);
            CHECK(static_cast<bool>(c_n2) == (zc == n - 2));
            for (const RecognitionResult* r : {&path, &two, &c2, &c1, &c_n2}) {
                if (*r) check_valid(g, *r);
            }
        }
    }
}

TEST_CASE("zero forcing families match the subset oracle on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            const int z = oracle::brute_z(g);
            INFO(write_graph6(g));
            CHECK(recognize_z_ge_n_minus_2(g) == (z >= n - 2));
            CHECK(static_cast<bool>(recognize_z_n_minus_2(g)) == (z == n - 2));
            const RecognitionResult h = recognize_hmr2_form(g);
            CHECK(static_cast<bool>(h) == (z >= n - 2));
            if (h) check_valid(g, h);
        }
    }
}
