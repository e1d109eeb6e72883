#include "doctest.h"

#include "bchrom/ab_family.hpp"
#include "bchrom/generators.hpp"
#include "bchrom/random_graphs.hpp"
#include "test_util.hpp"

using namespace bchrom;

namespace {

// The worked decomposition of the two-layer extremal graph with k=2, w=3.
// ids: A vertices 0,1; B vertices 2,3; C vertices 4,5.
ABDecomposition layered_decomposition() {
    ABDecomposition d;
    d.X = VertexSet::of(6, {0, 3, 4});
    d.Y = VertexSet::of(6, {1, 2, 5});
    d.A1 = VertexSet::of(6, {0});
    d.B1 = VertexSet::of(6, {4});
    d.C1 = VertexSet::of(6, {3});
    d.A2 = VertexSet::of(6, {1});
    d.B2 = VertexSet::of(6, {2});
    d.C2 = VertexSet::of(6, {5});
    d.mb = {{4, 2}};
    d.mc = {{3, 5}};
    d.b = 4;
    return d;
}

}  // namespace

TEST_CASE("verify_ab_decomposition accepts the single-edge graph") {
    Graph k2 = complete_graph(2);
    ABDecomposition d;
    d.X = VertexSet::of(2, {0});
    d.Y = VertexSet::of(2, {1});
    d.A1 = VertexSet::of(2, {0});
    d.A2 = VertexSet::of(2, {1});
    d.B1 = d.C1 = d.B2 = d.C2 = VertexSet(2);
    d.b = 2;
    CHECK(verify_ab_decomposition(k2, d));

    d.b = 3;
    CHECK(!verify_ab_decomposition(k2, d));
}

TEST_CASE("verify_ab_decomposition accepts the layered extremal witness") {
    Graph g = gen_clique_partition_extremal(2, 3).graph;
    CHECK(verify_ab_decomposition(g, layered_decomposition()));
}

TEST_CASE("a mismatched anti-matching fails verification") {
    Graph g = gen_clique_partition_extremal(2, 3).graph;
    auto d = layered_decomposition();
    d.mb = {{4, 5}};  // 5 is not in B2
    CHECK(!verify_ab_decomposition(g, d));
}

TEST_CASE("malformed part sets are errors, not refutations") {
    Graph g = gen_clique_partition_extremal(2, 3).graph;
    auto overlap = layered_decomposition();
    overlap.B1 = VertexSet::of(6, {0, 4});  // overlaps A1
    CHECK_THROWS_AS(verify_ab_decomposition(g, overlap), std::invalid_argument);

    auto gap = layered_decomposition();
    gap.C1 = VertexSet(6);  // vertex 3 no longer covered
    CHECK_THROWS_AS(verify_ab_decomposition(g, gap), std::invalid_argument);
}

TEST_CASE("the canonical coloring of a verified decomposition is a b-coloring") {
    Graph g = gen_clique_partition_extremal(2, 3).graph;
    auto cert = canonical_ab_coloring(g, layered_decomposition());
    CHECK(cert.coloring.num_colors() == 4);
    CHECK(validate_certificate(g, cert));
}

TEST_CASE("is_in_ab on fixed graphs") {
    Graph k2 = complete_graph(2);
    auto d2 = is_in_ab(k2, 2);
    REQUIRE(d2.has_value());
    CHECK(verify_ab_decomposition(k2, *d2));

    Graph g = gen_clique_partition_extremal(2, 3).graph;
    auto d4 = is_in_ab(g, 4);
    REQUIRE(d4.has_value());
    CHECK(verify_ab_decomposition(g, *d4));
    CHECK(d4->b == 4);
    CHECK(!is_in_ab(g, 5).has_value());

    CHECK_THROWS_AS(is_in_ab(cycle_graph(5), 3), std::invalid_argument);
}

TEST_CASE("phi_via_ab on fixed graphs") {
    for (int n = 1; n <= 5; ++n) {
        auto r = phi_via_ab(complete_graph(n));
        CHECK(r.value == n);
        CHECK(verify_ab_decomposition(complete_graph(n), r.witness));
    }
    CHECK(phi_via_ab(gen_clique_partition_extremal(2, 3).graph).value == 4);
    CHECK(phi_via_ab(complement(path_graph(4))).value == 2);
    CHECK_THROWS_AS(phi_via_ab(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("membership in A_b tracks b-colorability on random co-bipartite graphs") {
    for (int i = 0; i < 30; ++i) {
        int n = 2 + i % 8;
        Graph g = random_cobipartite(n / 2, n - n / 2, 0.2 + 0.15 * (i % 5), 21000 + i);
        int chi = chromatic_number(g).value;
        for (int b = chi; b <= g.max_degree() + 1; ++b) {
            auto member = is_in_ab(g, b);
            CHECK(member.has_value() == exists_b_coloring(g, b).has_value());
            if (member) {
                CHECK(verify_ab_decomposition(g, *member));
                // the decomposition really witnesses phi >= b
                CHECK(canonical_ab_coloring(g, *member).coloring.num_colors() == b);
            }
        }
        auto via_ab = phi_via_ab(g);
        CHECK(via_ab.value == b_chromatic_number(g).value);
        CHECK(verify_ab_decomposition(g, via_ab.witness));
    }
}
