#pragma once

#include "bchrom/invariants.hpp"

namespace bchrom {

struct PhiResult {
    int value = 0;
    BColoringCertificate witness;
};

/// Exact search for a b-coloring with exactly k colors. Representative-first:
/// pick k candidate representatives (one per color, degree >= k-1, in id
/// order), then extend to a full proper coloring while forcing each
/// representative's neighborhood to become rainbow. Nullopt when no such
/// coloring exists; throws budget_exceeded rather than guessing.
std::optional<BColoringCertificate> exists_b_coloring(const Graph& g, int k,
                                                      std::uint64_t budget = default_budget());

/// phi(G) with a self-validating certificate. Scans k downward from m(G) to
/// chi(G) and stops at the first feasible k; the descending scan matters
/// because the feasible k values need not form an interval.
PhiResult b_chromatic_number(const Graph& g, std::uint64_t budget = default_budget());

}  // namespace bchrom
