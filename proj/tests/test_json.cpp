#include "doctest.h"

#include "bchrom/ab_family.hpp"
#include "bchrom/generators.hpp"
#include "bchrom/json_io.hpp"
#include "bchrom/version.hpp"
#include "test_util.hpp"

using namespace bchrom;

TEST_CASE("graph json round-trip") {
    Graph g = gen_bipartite_extremal(4).graph;
    ojson j = graph_to_json(g);
    CHECK(graph_from_json(j) == g);
    CHECK(graph_to_json(graph_from_json(j)).dump() == j.dump());
}

TEST_CASE("certificate json round-trip revalidates") {
    auto inst = gen_clique_partition_extremal(2, 3);
    ojson j = certificate_to_json(inst.certificate);
    auto parsed = certificate_from_json(j);
    CHECK(validate_certificate(inst.graph, parsed));
    CHECK(certificate_to_json(parsed).dump() == j.dump());
}

TEST_CASE("decomposition json round-trip revalidates") {
    Graph g = gen_clique_partition_extremal(2, 3).graph;
    auto d = is_in_ab(g, 4);
    REQUIRE(d.has_value());
    ojson j = decomposition_to_json(*d);
    auto parsed = decomposition_from_json(j, g.order());
    CHECK(verify_ab_decomposition(g, parsed));
    CHECK(decomposition_to_json(parsed).dump() == j.dump());
}

TEST_CASE("biclique cover json round-trip stays valid") {
    Graph g = gen_bipartite_extremal(4).graph;
    auto bp = is_bipartite(g);
    REQUIRE(bp.has_value());
    auto cover = biclique_cover_number(g, *bp).witness;
    auto parsed = biclique_cover_from_json(biclique_cover_to_json(cover), g.order());
    CHECK(validate_biclique_cover(g, *bp, parsed));
}

TEST_CASE("bounds report json omits values of inapplicable bounds") {
    ojson j = bounds_report_to_json(bounds_report(star_graph(3), false));
    bool saw_inapplicable = false;
    for (const auto& rec : j.at("bounds")) {
        if (!rec.at("applicable").get<bool>()) {
            saw_inapplicable = true;
            CHECK(!rec.contains("value"));
        } else {
            CHECK(rec.contains("value"));
        }
    }
    CHECK(saw_inapplicable);  // K_{1,3} defeats the star-free hypotheses
}

TEST_CASE("report envelope carries the standard keys") {
    Graph g = complete_graph(3);
    ojson report = make_report(graph_to_json(g), ojson::array(), ojson::object(), 7, 1000);
    CHECK(report.contains("graph"));
    CHECK(report.contains("results"));
    CHECK(report.contains("certificates"));
    CHECK(report.at("meta").at("seed") == 7);
    CHECK(report.at("meta").at("budget") == 1000);
    CHECK(report.at("meta").at("versions").at("bchrom") == kVersion);
    CHECK(report.dump() == make_report(graph_to_json(g), ojson::array(), ojson::object(), 7, 1000).dump());
}
