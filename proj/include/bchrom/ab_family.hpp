#pragma once

#include "bchrom/bcolor.hpp"

namespace bchrom {

/// Witness that a co-bipartite graph admits a b-coloring with b colors, in
/// the six-part normal form: (X, Y) is a bipartition of the complement (so
/// both sides are cliques of g), A1/B1/C1 partition X, A2/B2/C2 partition Y,
/// and two perfect anti-matchings pair B1 with B2 and C1 with C2.
///
/// Required structure:
///   - every A1 vertex is adjacent to all of A2 and B2,
///   - every A2 vertex is adjacent to all of C1,
///   - each mb pair (x in B1, y in B2) and mc pair (x in C1, y in C2) is a
///     non-edge of g,
///   - b = |X| + |A2|.
struct ABDecomposition {
    VertexSet X, Y;
    VertexSet A1, B1, C1;
    VertexSet A2, B2, C2;
    std::vector<std::pair<int, int>> mb;  // anti-matching B1 -> B2
    std::vector<std::pair<int, int>> mc;  // anti-matching C1 -> C2
    int b = 0;
};

/// Structural check of all decomposition properties against g. Overlapping
/// or non-covering part sets are reported as errors; property failures
/// (missing adjacency, broken anti-matching, wrong b) return false.
bool verify_ab_decomposition(const Graph& g, const ABDecomposition& d);

/// The coloring the decomposition encodes: rainbow on X and A2, with B2 and
/// C2 copying their anti-matched partners' colors. Always a valid b-coloring
/// of a verified decomposition; validated before returning.
BColoringCertificate canonical_ab_coloring(const Graph& g, const ABDecomposition& d);

/// Decides membership in the A_b family. Runs the b-coloring search; on
/// success extracts the decomposition from the coloring (singleton classes
/// give A1/A2, two-vertex classes split into B- or C-pairs by which side
/// carries the representative) and verifies it. The input must be
/// co-bipartite; extraction failing verification is an internal error.
std::optional<ABDecomposition> is_in_ab(const Graph& g, int b,
                                        std::uint64_t budget = default_budget());

struct PhiAbResult {
    int value = 0;
    ABDecomposition witness;
};

/// phi through the family characterization: the largest b with g in A_b,
/// scanned downward from floor(4*omega/3).
PhiAbResult phi_via_ab(const Graph& g, std::uint64_t budget = default_budget());

}  // namespace bchrom
