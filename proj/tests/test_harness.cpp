#include "doctest.h"

#include <deque>

#include "bchrom/bounds.hpp"
#include "bchrom/generators.hpp"
#include "bchrom/harness.hpp"
#include "test_util.hpp"

using namespace bchrom;

namespace {

bool connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen(g.order());
    std::deque<int> queue{0};
    seen.add(0);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u))
            if (!seen.contains(v)) {
                seen.add(v);
                queue.push_back(v);
            }
    }
    return seen == VertexSet::full(g.order());
}

}  // namespace

TEST_CASE("random_graph endpoints and determinism") {
    CHECK(random_graph(5, 0.0, 7).edge_count() == 0);
    CHECK(random_graph(5, 1.0, 7) == complete_graph(5));
    CHECK(random_graph(9, 0.5, 123) == random_graph(9, 0.5, 123));
    CHECK(random_graph(9, 0.5, 123) != random_graph(9, 0.5, 124));
    CHECK_THROWS_AS(random_graph(3, 1.5, 1), std::invalid_argument);
}

TEST_CASE("random family shapes") {
    for (int i = 0; i < 20; ++i) {
        Graph b = random_bipartite(3, 4, 0.5, 300 + i);
        CHECK(is_bipartite(b).has_value());
        Graph co = random_cobipartite(3, 4, 0.5, 300 + i);
        CHECK(co == complement(b));
        CHECK(is_bipartite(complement(co)).has_value());
        Graph t = random_tree(2 + i % 12, 300 + i);
        CHECK(t.edge_count() == static_cast<std::size_t>(t.order() - 1));
        CHECK(connected(t));
    }
}

TEST_CASE("check_theorems finds no violations on small exhaustive graphs") {
    CHECK(check_theorems(cycle_graph(5)).violations.empty());
    // all 1024 labeled graphs on 5 vertices
    const std::pair<int, int> pairs[10] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                           {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    for (int mask = 0; mask < 1024; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 10; ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        CHECK(check_theorems(Graph(5, edges)).violations.empty());
    }
}

TEST_CASE("the layered extremal graph meets two distinct bounds at once") {
    auto report = check_theorems(gen_clique_partition_extremal(2, 3).graph);
    REQUIRE(report.exact_phi.has_value());
    CHECK(*report.exact_phi == 4);
    int tight = 0;
    for (const auto& rec : report.bounds)
        if (rec.applicable && (rec.name == "clique_partition" || rec.name == "cobipartite") &&
            *rec.value == 4)
            ++tight;
    CHECK(tight == 2);
    CHECK(report.violations.empty());
}

TEST_CASE("fuzz campaigns are deterministic") {
    FuzzConfig cfg;
    cfg.family = "general";
    cfg.n_min = 4;
    cfg.n_max = 7;
    cfg.samples = 8;
    cfg.seed = 99;
    auto first = run_fuzz(cfg);
    auto second = run_fuzz(cfg);
    CHECK(first.report.dump() == second.report.dump());
    CHECK(first.passed == 8);
    CHECK(first.violation_samples.empty());
}

TEST_CASE("fuzz covers the other families") {
    for (const char* family : {"bipartite", "cobipartite", "k1t-free", "tree"}) {
        FuzzConfig cfg;
        cfg.family = family;
        cfg.n_min = 3;
        cfg.n_max = 6;
        cfg.samples = 4;
        cfg.seed = 7;
        auto outcome = run_fuzz(cfg);
        CHECK(outcome.passed == 4);
        CHECK(outcome.violation_samples.empty());
    }
}

TEST_CASE("budget exhaustion is recorded as skipped, never as passed") {
    FuzzConfig cfg;
    cfg.family = "general";
    cfg.n_min = 9;
    cfg.n_max = 9;
    cfg.samples = 3;
    cfg.seed = 5;
    cfg.budget = 10;
    auto outcome = run_fuzz(cfg);
    CHECK(outcome.skipped == 3);
    CHECK(outcome.passed == 0);
    for (const auto& entry : outcome.report.at("results"))
        CHECK(entry.at("status").get<std::string>() == "skipped");
}

TEST_CASE("fuzz validates its configuration") {
    FuzzConfig bad_family;
    bad_family.family = "nonsense";
    CHECK_THROWS_AS(run_fuzz(bad_family), std::invalid_argument);

    FuzzConfig too_big;
    too_big.family = "general";
    too_big.n_max = 30;
    CHECK_THROWS_AS(run_fuzz(too_big), std::invalid_argument);

    FuzzConfig bad_p;
    bad_p.edge_probability = 2.0;
    CHECK_THROWS_AS(run_fuzz(bad_p), std::invalid_argument);
}

TEST_CASE("fuzz config json round-trip") {
    FuzzConfig cfg;
    cfg.family = "tree";
    cfg.n_min = 5;
    cfg.n_max = 9;
    cfg.samples = 17;
    cfg.seed = 321;
    auto parsed = fuzz_config_from_json(fuzz_config_to_json(cfg));
    CHECK(fuzz_config_to_json(parsed).dump() == fuzz_config_to_json(cfg).dump());
}
