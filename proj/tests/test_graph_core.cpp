#include <doctest.h>

#include <random>
#include <sstream>

#include "forcinglab/enumerate.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/graph6.hpp"
#include "forcinglab/isomorphism.hpp"
#include "oracles.hpp"

using namespace forcinglab;

TEST_CASE("vertex sets") {
    VertexSet s{3, 1, 5};
    CHECK(s.size() == 3);
    CHECK(s.first() == 1);
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(2));
    CHECK(s.to_vector() == std::vector<Vertex>{1, 3, 5});
    CHECK((s - VertexSet{1}) == VertexSet{3, 5});
    CHECK(VertexSet{1}.is_subset_of(s));
    CHECK(VertexSet::prefix(4) == VertexSet{0, 1, 2, 3});
    // (size, lexicographic) order
    CHECK(VertexSet{7} < VertexSet{0, 1});
    CHECK(VertexSet{0, 5} < VertexSet{1, 2});
    CHECK(VertexSet{0, 1, 9} < VertexSet{0, 2, 3});
    CHECK_FALSE(VertexSet{1, 2} < VertexSet{1, 2});
    std::ostringstream os;
    os << s;
    CHECK(os.str() == "{1,3,5}");
}

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
    CHECK(Graph(3, {{0, 1}, {1, 0}}).size() == 1);
    CHECK_THROWS_AS(Graph::from_adjacency({VertexSet{1}, VertexSet{}}), PreconditionError);
    CHECK_THROWS_AS(Graph(65), UnsupportedSize);
    const Graph g(4, {{0, 1}, {1, 2}});
    CHECK(g.size() == 2);
    CHECK(g.degree_sequence() == std::vector<int>{1, 2, 1, 0});
    for (Vertex u = 0; u < 4; ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (Vertex v = 0; v < 4; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
}

TEST_CASE("graph6 parsing, hand-encoded examples") {
    const Graph k3 = parse_graph6("Bw");
    CHECK(k3 == graphs::complete(3));
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
    // P4 0-1-2-3: bits (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=0 (1,3)=0 (2,3)=1 -> 101001 -> 41+63 = 104 'h'.
    const Graph p4 = parse_graph6("Ch");
    CHECK(p4 == graphs::path(4));
    CHECK(p4.degree_sequence() == std::vector<int>{1, 2, 2, 1});
    CHECK(write_graph6(graphs::complete(3)) == "Bw");
    CHECK(write_graph6(graphs::empty(1)) == "@");
    CHECK(write_graph6(graphs::path(4)) == "Ch");
    CHECK(parse_graph6("Bw\n") == k3);
    CHECK(parse_graph6("Bw\r\n") == k3);
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 errors carry byte offsets") {
    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            parse_graph6(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return 9999;
    };
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK(offset_of(" ") == 0);
    CHECK(offset_of("B") == 1);        // body missing
    CHECK(offset_of("Bww") == 2);      // trailing byte
    CHECK(offset_of("B ") == 1);       // byte below 63
    CHECK(offset_of("Bx") == 1);       // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~?@?"), UnsupportedSize);
    CHECK_THROWS_AS(write_graph6(Graph(63)), UnsupportedSize);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> order(0, 20);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const Graph g = oracle::random_graph(rng, order(rng), density(rng));
        REQUIRE(parse_graph6(write_graph6(g)) == g);
    }
    const Graph big = oracle::random_graph(rng, 62, 0.5);
    CHECK(parse_graph6(write_graph6(big)) == big);
}

TEST_CASE("graph6 reader tolerates malformed lines") {
    std::istringstream in(">>graph6<<Bw\n@\n\nB \nCh\n");
    // A header glued to the first line is accepted as nauty writes it.
    Graph6Reader reader(in);
    std::vector<Graph> got;
    while (auto g = reader.next()) got.push_back(*g);
    REQUIRE(got.size() == 3);
    CHECK(got[0] == graphs::complete(3));
    CHECK(got[1].order() == 1);
    CHECK(got[2] == graphs::path(4));
    REQUIRE(reader.diagnostics().size() == 1);
    CHECK(reader.diagnostics()[0].line == 4);

    std::istringstream strict_in("Bw\nB \n");
    Graph6Reader strict(strict_in, true);
    CHECK(strict.next().has_value());
    CHECK_THROWS_AS(strict.next(), ParseError);

    std::istringstream empty_in("");
    Graph6Reader empty(empty_in);
    CHECK_FALSE(empty.next().has_value());
    CHECK_THROWS_AS(ingest_graph6("/nonexistent/corpus.g6"), Error);
}

TEST_CASE("graph operations") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(complement(graphs::complete(n)) == graphs::empty(n));
        CHECK(isomorphic(join(graphs::complete(1), graphs::empty(n)), graphs::star(n)));
    }
    const Graph c5 = graphs::cycle(5);
    CHECK(isomorphic(complement(c5), c5));
    CHECK(oracle::brute_isomorphic(complement(c5), c5));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Graph g = oracle::random_graph(rng, 7, 0.4);
        CHECK(complement(complement(g)) == g);
        const Graph h = oracle::random_graph(rng, 4, 0.5);
        CHECK(disjoint_union(g, h).size() == g.size() + h.size());
        CHECK(join(g, h).size() == g.size() + h.size() + 7 * 4);
    }
    CHECK(isomorphic(complement(disjoint_union(graphs::complete(2), graphs::complete(3))),
                     graphs::complete_bipartite(2, 3)));

    const Graph k5 = graphs::complete(5);
    CHECK(induced_subgraph(k5, VertexSet{0, 2, 4}).graph == graphs::complete(3));
    CHECK(induced_subgraph(c5, c5.vertices()).graph == c5);
    const InducedSubgraph p3 = induced_subgraph(graphs::cycle(6), VertexSet{0, 1, 2});
    CHECK(p3.graph == graphs::path(3));
    CHECK(p3.old_index == std::vector<Vertex>{0, 1, 2});
    CHECK_THROWS_AS(graphs::cycle(2), PreconditionError);
    CHECK(is_connected(Graph(0)));
    CHECK_FALSE(induces_connected(c5, VertexSet{}));
}

TEST_CASE("canonical labels agree with brute-force isomorphism") {
    const Graph p3a(3, {{0, 1}, {1, 2}});
    const Graph p3b(3, {{1, 0}, {0, 2}});
    CHECK(canonical_label(p3a) == canonical_label(p3b));
    CHECK(canonical_label(graphs::complete(3)) != canonical_label(p3a));
    CHECK(canonical_label(graphs::path(4)) != canonical_label(graphs::star(3)));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        REQUIRE(canonical_label(g) == canonical_label(h));
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(oracle::brute_isomorphic(g, canonical_form(g)));
        const Graph other = oracle::random_graph(rng, n, 0.5);
        CHECK(isomorphic(g, other) == oracle::brute_isomorphic(g, other));
    }
    CHECK_THROWS_AS(canonical_label(Graph(kCanonicalMaxOrder + 1)), UnsupportedSize);
}

TEST_CASE("induced subgraph search") {
    CHECK(contains_induced(graphs::path(5), graphs::path(4)));
    CHECK_FALSE(contains_induced(graphs::complete(4), graphs::path(4)));
    const Graph u = disjoint_union(graphs::path(2), graphs::path(3));
    const auto witness = find_induced(u, u);
    REQUIRE(witness.has_value());
    CHECK(oracle::induced(u, VertexSet::of(*witness).bits()).size() == u.size());
    CHECK(contains_induced(graphs::cycle(6), disjoint_union(graphs::path(2), graphs::path(2))));
    CHECK_FALSE(contains_induced(graphs::cycle(5), disjoint_union(graphs::path(2), graphs::path(3))));
}

TEST_CASE("enumeration matches labeled brute force") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = oracle::labeled_classes(n, false);
        const auto conn = oracle::labeled_classes(n, true);
        CHECK(enumerate_graphs(n).size() == all.size());
        CHECK(enumerate_connected(n).size() == conn.size());
        std::set<std::string> mine;
        for (const Graph& g : enumerate_graphs(n)) mine.insert(oracle::brute_canonical(g));
        CHECK(mine == all);
    }
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
}

TEST_CASE("enumeration counts for larger orders") {
    // Standard sequences: all graphs and connected graphs by order.
    const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
    const std::size_t conn[] = {1, 1, 2, 6, 21, 112, 853};
    std::size_t total = 0;
    for (int n = 1; n <= 7; ++n) {
        CHECK(enumerate_graphs(n).size() == all[n - 1]);
        CHECK(enumerate_connected(n).size() == conn[n - 1]);
        if (n >= 2) total += enumerate_connected(n).size();
    }
    CHECK(total == 995);
    // Distinct classes by brute force at n = 6.
    std::set<std::string> labels;
    for (const Graph& g : enumerate_graphs(6)) labels.insert(oracle::brute_canonical(g));
    CHECK(labels.size() == 156);
    CHECK_THROWS_AS(enumerate_graphs(kEnumerateMaxOrder + 1), UnsupportedSize);
    CHECK_THROWS_AS(enumerate_graphs(0), UnsupportedSize);
}

TEST_CASE("tree enumeration") {
    const std::size_t trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) {
        const auto t = enumerate_trees(n);
        CHECK(t.size() == trees[n - 1]);
        for (const Graph& g : t) {
            CHECK(g.size() == n - 1);
            CHECK(oracle::graph_connected(g));
        }
    }
    // Trees of order <= 8 are exactly the connected graphs with n - 1 edges.
    for (int n = 1; n <= 8; ++n) {
        std::size_t count = 0;
        for (const Graph& g : enumerate_connected(n)) count += g.size() == n - 1 ? 1 : 0;
        CHECK(enumerate_trees(n).size() == count);
    }
    CHECK_THROWS_AS(enumerate_trees(kTreeMaxOrder + 1), UnsupportedSize);
}
