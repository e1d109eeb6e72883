#include "doctest.h"

#include <algorithm>

#include "bchrom/bounds.hpp"
#include "bchrom/generators.hpp"
#include "test_util.hpp"

using namespace bchrom;

TEST_CASE("gen_k1t_extremal(3,2): three chained stars") {
    auto inst = gen_k1t_extremal(3, 2);
    CHECK(inst.graph.order() == 9);
    CHECK(inst.claimed_phi == 3);
    CHECK(validate_certificate(inst.graph, inst.certificate));
    CHECK(inst.certificate.coloring.num_colors() == 3);
    CHECK(chromatic_number(inst.graph).value == 2);
    CHECK(is_k1t_free(inst.graph, 3));
    CHECK(b_chromatic_number(inst.graph).value == 3);
}

TEST_CASE("gen_k1t_extremal(3,3): 25 vertices, chi 3") {
    auto inst = gen_k1t_extremal(3, 3);
    CHECK(inst.graph.order() == 25);
    CHECK(inst.claimed_phi == 5);
    CHECK(validate_certificate(inst.graph, inst.certificate));
    CHECK(chromatic_number(inst.graph).value == 3);
    CHECK(is_k1t_free(inst.graph, 3));
    auto bound = bound_k1t(inst.graph, 3);
    REQUIRE(bound.has_value());
    CHECK(*bound == 5);  // certificate + bound pin phi without search
}

TEST_CASE("gen_k1t_extremal(4,2): four chained stars") {
    auto inst = gen_k1t_extremal(4, 2);
    CHECK(inst.graph.order() == 16);
    CHECK(inst.claimed_phi == 4);
    CHECK(validate_certificate(inst.graph, inst.certificate));
    CHECK(is_k1t_free(inst.graph, 4));
    CHECK(!is_k1t_free(inst.graph, 3));  // each center carries three leaves
    auto bound = bound_k1t(inst.graph, 4);
    REQUIRE(bound.has_value());
    CHECK(*bound == 4);
}

TEST_CASE("gen_k1t_extremal rejects degenerate parameters") {
    CHECK_THROWS_AS(gen_k1t_extremal(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_k1t_extremal(3, 1), std::invalid_argument);
}

TEST_CASE("gen_clique_partition_extremal instances") {
    auto small = gen_clique_partition_extremal(2, 3);
    CHECK(small.graph.order() == 6);
    CHECK(small.claimed_phi == 4);
    CHECK(validate_certificate(small.graph, small.certificate));
    CHECK(clique_number(small.graph) == 3);
    CHECK(clique_partition_number(small.graph) == 2);

    auto wide = gen_clique_partition_extremal(2, 6);
    CHECK(wide.graph.order() == 12);
    CHECK(wide.claimed_phi == 8);
    CHECK(validate_certificate(wide.graph, wide.certificate));

    auto tall = gen_clique_partition_extremal(3, 5);
    CHECK(tall.graph.order() == 15);
    CHECK(tall.claimed_phi == 9);
    CHECK(validate_certificate(tall.graph, tall.certificate));

    CHECK_THROWS_AS(gen_clique_partition_extremal(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(gen_clique_partition_extremal(1, 3), std::invalid_argument);
}

TEST_CASE("gen_bipartite_extremal(3) is the 5-vertex path") {
    auto inst = gen_bipartite_extremal(3);
    CHECK(inst.graph.order() == 5);
    CHECK(inst.claimed_phi == 3);
    CHECK(inst.graph.edge_count() == 4);
    std::vector<int> degrees;
    for (int v = 0; v < 5; ++v) degrees.push_back(inst.graph.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 1, 2, 2, 2});
    CHECK(is_bipartite(inst.graph).has_value());
    CHECK(validate_certificate(inst.graph, inst.certificate));
}

TEST_CASE("gen_bipartite_extremal(4) and (5)") {
    auto p4 = gen_bipartite_extremal(4);
    CHECK(p4.graph.order() == 8);
    CHECK(p4.claimed_phi == 4);
    CHECK(p4.graph.max_degree() == 3);
    auto bp = is_bipartite(p4.graph);
    REQUIRE(bp.has_value());
    CHECK(biclique_cover_number(p4.graph, *bp).value == 3);
    CHECK(validate_certificate(p4.graph, p4.certificate));

    auto p5 = gen_bipartite_extremal(5);
    CHECK(p5.graph.order() == 11);
    CHECK(p5.claimed_phi == 5);
    CHECK(p5.graph.max_degree() == 4);
    CHECK(m_bound(p5.graph) == 5);
    CHECK(validate_certificate(p5.graph, p5.certificate));

    CHECK_THROWS_AS(gen_bipartite_extremal(2), std::invalid_argument);
}

TEST_CASE("every generator certificate matches its claim") {
    for (const auto& inst : {gen_k1t_extremal(3, 2), gen_clique_partition_extremal(2, 3),
                             gen_bipartite_extremal(4)}) {
        CHECK(inst.certificate.coloring.num_colors() == inst.claimed_phi);
        CHECK(is_b_coloring(inst.graph, inst.certificate.coloring, inst.claimed_phi).has_value());
    }
}
