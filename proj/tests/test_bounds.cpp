#include "doctest.h"

#include <algorithm>

#include "bchrom/bounds.hpp"
#include "bchrom/generators.hpp"
#include "bchrom/random_graphs.hpp"
#include "test_util.hpp"

using namespace bchrom;

namespace {

const BoundRecord& find_bound(const BoundsReport& r, const std::string& name) {
    auto it = std::find_if(r.bounds.begin(), r.bounds.end(),
                           [&](const BoundRecord& b) { return b.name == name; });
    REQUIRE(it != r.bounds.end());
    return *it;
}

}  // namespace

TEST_CASE("bound_k1t") {
    CHECK(bound_k1t(cycle_graph(5), 3) == 5);
    CHECK(!bound_k1t(star_graph(3), 3).has_value());
    CHECK_THROWS_AS(bound_k1t(cycle_graph(5), 2), std::invalid_argument);

    auto inst = gen_k1t_extremal(3, 2);
    auto bound = bound_k1t(inst.graph, 3);
    REQUIRE(bound.has_value());
    CHECK(*bound == 3);
    CHECK(b_chromatic_number(inst.graph).value == 3);  // tight
}

TEST_CASE("bound_clique_partition") {
    for (int n : {2, 4, 6}) CHECK(bound_clique_partition(complete_graph(n)) == n);
    CHECK(bound_clique_partition(cycle_graph(5)) == 3);  // k=3, w=2
    CHECK(b_chromatic_number(cycle_graph(5)).value == 3);

    auto inst = gen_clique_partition_extremal(2, 3);
    CHECK(bound_clique_partition(inst.graph) == 4);
    CHECK(b_chromatic_number(inst.graph).value == 4);  // tight
}

TEST_CASE("bound_cobipartite") {
    auto inst = gen_clique_partition_extremal(2, 3);
    CHECK(bound_cobipartite(inst.graph) == 4);
    CHECK(bound_cobipartite(complete_graph(3)) == 4);
    CHECK(bound_cobipartite(complete_graph(6)) == 8);
    CHECK(!bound_cobipartite(cycle_graph(5)).has_value());

    Graph co_p4 = complement(path_graph(4));  // again a 4-vertex path
    auto bound = bound_cobipartite(co_p4);
    REQUIRE(bound.has_value());
    CHECK(*bound == 2);
    CHECK(b_chromatic_number(co_p4).value == 2);
}

TEST_CASE("bound_bipartite") {
    auto p3 = gen_bipartite_extremal(3);
    auto bound = bound_bipartite(p3.graph);
    REQUIRE(bound.has_value());
    CHECK(*bound == 3);
    CHECK(b_chromatic_number(p3.graph).value == 3);  // tight

    auto k33 = bound_bipartite(complete_bipartite(3, 3));
    REQUIRE(k33.has_value());
    CHECK(*k33 == 4);
    CHECK(b_chromatic_number(complete_bipartite(3, 3)).value == 2);

    auto empty4 = bound_bipartite(Graph(4));
    REQUIRE(empty4.has_value());
    CHECK(*empty4 == 2);
    CHECK(b_chromatic_number(Graph(4)).value == 1);

    CHECK(!bound_bipartite(complete_graph(3)).has_value());
}

TEST_CASE("bounds_report on C_5") {
    auto report = bounds_report(cycle_graph(5), true);
    CHECK(find_bound(report, "k1t_free_t3").value == 5);
    CHECK(find_bound(report, "claw_free_2chi_minus_1").value == 5);
    CHECK(find_bound(report, "clique_partition").value == 3);
    CHECK(!find_bound(report, "cobipartite").applicable);
    CHECK(!find_bound(report, "bipartite_biclique").applicable);
    CHECK(find_bound(report, "m_bound").value == 3);
    CHECK(find_bound(report, "max_degree_plus_1").value == 3);
    REQUIRE(report.exact_phi.has_value());
    CHECK(*report.exact_phi == 3);
    CHECK(report.violations.empty());
}

TEST_CASE("bounds_report on K_4 and an extremal bipartite instance") {
    auto k4 = bounds_report(complete_graph(4), true);
    CHECK(*k4.exact_phi == 4);
    for (const auto& rec : k4.bounds)
        if (rec.applicable) CHECK(*rec.value >= 4);
    CHECK(k4.violations.empty());

    auto p4 = gen_bipartite_extremal(4);
    auto report = bounds_report(p4.graph, true);
    CHECK(find_bound(report, "bipartite_biclique").value == 4);
    CHECK(*report.exact_phi == 4);
    CHECK(report.violations.empty());
}

TEST_CASE("no bound is ever violated on random graphs") {
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(1 + i % 8, 0.2 + 0.1 * (i % 7), 18000 + i);
        CHECK(check_theorems(g).violations.empty());
    }
}

TEST_CASE("the co-bipartite bound is the k=2 clique partition bound") {
    int hits = 0;
    for (int i = 0; i < 40; ++i) {
        int n = 2 + i % 8;
        Graph g = random_cobipartite(n / 2, n - n / 2, 0.3 + 0.1 * (i % 6), 19000 + i);
        if (clique_partition_number(g) != 2) continue;
        ++hits;
        CHECK(bound_cobipartite(g) == bound_clique_partition(g));
    }
    CHECK(hits > 0);
}

TEST_CASE("the claw-free value is the t=3 star-free bound") {
    int hits = 0;
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(2 + i % 7, 0.45 + 0.1 * (i % 5), 20000 + i);
        if (!is_k1t_free(g, 3)) continue;
        ++hits;
        auto report = bounds_report(g, false);
        CHECK(find_bound(report, "claw_free_2chi_minus_1").value ==
              find_bound(report, "k1t_free_t3").value);
    }
    CHECK(hits > 0);
}
