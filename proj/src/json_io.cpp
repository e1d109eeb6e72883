#include "bchrom/json_io.hpp"

#include "bchrom/version.hpp"

namespace bchrom {

namespace {

ojson set_to_json(const VertexSet& s) { return ojson(s.to_vector()); }

VertexSet set_from_json(const ojson& j, int universe) {
    VertexSet s(universe);
    for (const auto& v : j) s.add(v.get<int>());
    return s;
}

ojson pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    ojson out = ojson::array();
    for (auto [a, b] : pairs) out.push_back(ojson::array({a, b}));
    return out;
}

std::vector<std::pair<int, int>> pairs_from_json(const ojson& j) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return out;
}

}  // namespace

ojson graph_to_json(const Graph& g) {
    ojson j;
    j["n"] = g.order();
    j["edges"] = pairs_to_json(g.edges());
    return j;
}

Graph graph_from_json(const ojson& j) {
    return Graph(j.at("n").get<int>(), pairs_from_json(j.at("edges")));
}

ojson coloring_to_json(const Coloring& c) {
    ojson j;
    j["colors"] = c.assignment();
    return j;
}

Coloring coloring_from_json(const ojson& j) {
    return Coloring(j.at("colors").get<std::vector<int>>());
}

ojson certificate_to_json(const BColoringCertificate& cert) {
    ojson j;
    j["colors"] = cert.coloring.assignment();
    j["representatives"] = cert.representatives;
    return j;
}

BColoringCertificate certificate_from_json(const ojson& j) {
    return {Coloring(j.at("colors").get<std::vector<int>>()),
            j.at("representatives").get<std::vector<int>>()};
}

ojson decomposition_to_json(const ABDecomposition& d) {
    ojson j;
    j["X"] = set_to_json(d.X);
    j["Y"] = set_to_json(d.Y);
    j["A1"] = set_to_json(d.A1);
    j["B1"] = set_to_json(d.B1);
    j["C1"] = set_to_json(d.C1);
    j["A2"] = set_to_json(d.A2);
    j["B2"] = set_to_json(d.B2);
    j["C2"] = set_to_json(d.C2);
    j["MB"] = pairs_to_json(d.mb);
    j["MC"] = pairs_to_json(d.mc);
    j["b"] = d.b;
    return j;
}

ABDecomposition decomposition_from_json(const ojson& j, int universe) {
    ABDecomposition d;
    d.X = set_from_json(j.at("X"), universe);
    d.Y = set_from_json(j.at("Y"), universe);
    d.A1 = set_from_json(j.at("A1"), universe);
    d.B1 = set_from_json(j.at("B1"), universe);
    d.C1 = set_from_json(j.at("C1"), universe);
    d.A2 = set_from_json(j.at("A2"), universe);
    d.B2 = set_from_json(j.at("B2"), universe);
    d.C2 = set_from_json(j.at("C2"), universe);
    d.mb = pairs_from_json(j.at("MB"));
    d.mc = pairs_from_json(j.at("MC"));
    d.b = j.at("b").get<int>();
    return d;
}

ojson biclique_cover_to_json(const BicliqueCover& cover) {
    ojson blocks = ojson::array();
    for (const auto& [s1, s2] : cover.blocks) {
        ojson block;
        block["s1"] = set_to_json(s1);
        block["s2"] = set_to_json(s2);
        blocks.push_back(std::move(block));
    }
    ojson j;
    j["blocks"] = std::move(blocks);
    return j;
}

BicliqueCover biclique_cover_from_json(const ojson& j, int universe) {
    BicliqueCover cover;
    for (const auto& block : j.at("blocks"))
        cover.blocks.emplace_back(set_from_json(block.at("s1"), universe),
                                  set_from_json(block.at("s2"), universe));
    return cover;
}

ojson bounds_report_to_json(const BoundsReport& report) {
    ojson bounds = ojson::array();
    for (const auto& rec : report.bounds) {
        ojson b;
        b["name"] = rec.name;
        b["applicable"] = rec.applicable;
        b["hypothesis"] = rec.hypothesis;
        if (rec.value) b["value"] = *rec.value;
        bounds.push_back(std::move(b));
    }
    ojson j;
    j["bounds"] = std::move(bounds);
    if (report.exact_phi) j["exact_phi"] = *report.exact_phi;
    j["violations"] = report.violations;
    return j;
}

ojson make_report(const ojson& graph, const ojson& results, const ojson& certificates,
                  std::uint64_t seed, std::uint64_t budget) {
    ojson j;
    j["graph"] = graph;
    j["results"] = results;
    j["certificates"] = certificates;
    j["meta"] = {{"seed", seed},
                 {"budget", budget},
                 {"versions", {{"bchrom", kVersion}, {"schema", kSchemaVersion}}}};
    return j;
}

}  // namespace bchrom
