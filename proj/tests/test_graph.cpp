#include "doctest.h"

#include "bchrom/graph.hpp"
#include "bchrom/oracle.hpp"
#include "bchrom/random_graphs.hpp"
#include "test_util.hpp"

using namespace bchrom;

TEST_CASE("parse_dimacs reads the basic format") {
    Graph g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(g.order() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("parse_dimacs handles comments, blanks, and duplicates") {
    Graph g = parse_dimacs("c hello\n\np edge 4 3\ne 1 2\ne 2 1\ne 3 4\n");
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);  // duplicate edge collapsed
}

TEST_CASE("parse_dimacs edgeless header") {
    Graph g = parse_dimacs("p edge 4 0\n");
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parse_dimacs error cases name the line") {
    CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 2 2\n"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("p foo 3 1\n"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("p edge 3 0\nq 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_dimacs(""), parse_error);
    CHECK_THROWS_WITH_AS(parse_dimacs("p edge 2 1\ne 1 1\n"),
                         doctest::Contains("line 2"), parse_error);
}

TEST_CASE("dimacs writer emits sorted 1-based edges") {
    Graph g(3, {{1, 2}, {0, 1}});
    CHECK(to_dimacs(g, "x") == "c x\np edge 3 2\ne 1 2\ne 2 3\n");
}

TEST_CASE("dimacs round-trip on random graphs") {
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(1 + i % 9, 0.4, 900 + i);
        CHECK(parse_dimacs(to_dimacs(g)) == g);
    }
}

TEST_CASE("graph constructor rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("complement of K_3 is edgeless") {
    CHECK(complement(complete_graph(3)).edge_count() == 0);
}

TEST_CASE("C_5 is self-complementary") {
    Graph co = complement(cycle_graph(5));
    CHECK(co.edge_count() == 5);
    // the complement is the pentagram cycle 0-2-4-1-3-0
    for (auto [u, v] : {std::pair{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}) CHECK(co.has_edge(u, v));
}

TEST_CASE("complement is an involution and edge counts add up") {
    for (int i = 0; i < 100; ++i) {
        int n = i % 10;
        Graph g = random_graph(n, 0.5, 1000 + i);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() ==
              static_cast<std::size_t>(n) * (n - 1) / 2);
    }
}

TEST_CASE("induced subgraphs relabel and keep inner edges") {
    Graph p3 = induced_subgraph(cycle_graph(5), std::vector<int>{1, 2, 3}).graph;
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));

    Graph c5 = cycle_graph(5);
    auto full = induced_subgraph(c5, c5.vertices());
    CHECK(full.graph == c5);
    CHECK(full.vertices == std::vector<int>{0, 1, 2, 3, 4});

    Graph k3 = induced_subgraph(complete_graph(5), std::vector<int>{0, 2, 4}).graph;
    CHECK(k3 == complete_graph(3));

    CHECK_THROWS_AS(induced_subgraph(c5, std::vector<int>{7}), std::invalid_argument);
}

TEST_CASE("is_bipartite on cycles and edgeless graphs") {
    auto bp = is_bipartite(cycle_graph(6));
    REQUIRE(bp.has_value());
    CHECK(bp->X == VertexSet::of(6, {0, 2, 4}));
    CHECK(bp->Y == VertexSet::of(6, {1, 3, 5}));

    CHECK(!is_bipartite(cycle_graph(5)).has_value());

    auto empty3 = is_bipartite(Graph(3));
    REQUIRE(empty3.has_value());
    CHECK(empty3->X == VertexSet::full(3));  // isolated vertices go to X
    CHECK(empty3->Y.empty());
}

TEST_CASE("is_bipartite agrees with exhaustive odd-cycle search") {
    for (int i = 0; i < 120; ++i) {
        Graph g = random_graph(1 + i % 8, 0.15 + 0.1 * (i % 7), 2000 + i);
        CHECK(is_bipartite(g).has_value() == !oracle::has_odd_cycle(g));
    }
}

TEST_CASE("is_k1t_free basics") {
    CHECK(!is_k1t_free(star_graph(3), 3));
    CHECK(is_k1t_free(cycle_graph(5), 3));
    // every Petersen neighborhood is an independent triple
    CHECK(!is_k1t_free(petersen_graph(), 3));
    CHECK(oracle::has_induced_star(petersen_graph(), 3));
    CHECK(is_k1t_free(petersen_graph(), 4));
    CHECK_THROWS_AS(is_k1t_free(cycle_graph(5), 1), std::invalid_argument);
}

TEST_CASE("is_k1t_free agrees with brute-force star search") {
    for (int i = 0; i < 120; ++i) {
        Graph g = random_graph(1 + i % 8, 0.2 + 0.1 * (i % 7), 3000 + i);
        for (int t : {3, 4}) CHECK(is_k1t_free(g, t) == !oracle::has_induced_star(g, t));
    }
}
