#pragma once

#include "json.hpp"

#include "bchrom/ab_family.hpp"
#include "bchrom/bounds.hpp"
#include "bchrom/coloring.hpp"
#include "bchrom/invariants.hpp"

namespace bchrom {

// ordered_json keeps insertion order, so equal inputs dump to equal bytes
using ojson = nlohmann::ordered_json;

ojson graph_to_json(const Graph& g);
Graph graph_from_json(const ojson& j);

ojson coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const ojson& j);

ojson certificate_to_json(const BColoringCertificate& cert);
BColoringCertificate certificate_from_json(const ojson& j);

ojson decomposition_to_json(const ABDecomposition& d);
ABDecomposition decomposition_from_json(const ojson& j, int universe);

ojson biclique_cover_to_json(const BicliqueCover& cover);
BicliqueCover biclique_cover_from_json(const ojson& j, int universe);

ojson bounds_report_to_json(const BoundsReport& report);

/// Standard report envelope: {graph, results, certificates, meta}.
ojson make_report(const ojson& graph, const ojson& results, const ojson& certificates,
                  std::uint64_t seed, std::uint64_t budget);

}  // namespace bchrom
