#pragma once

#include <utility>
#include <vector>

#include "bchrom/budget.hpp"
#include "bchrom/coloring.hpp"

namespace bchrom {

struct ChromaticResult {
    int value = 0;
    Coloring witness;
};

/// Vertex-disjoint complete-bipartite blocks jointly covering all vertices.
/// A block is a subgraph, not necessarily induced: every s1-s2 pair must be
/// an edge, nothing is said about other pairs. A single vertex is a legal
/// degenerate block (empty s2).
struct BicliqueCover {
    std::vector<std::pair<VertexSet, VertexSet>> blocks;  // (X-side, Y-side)
};

struct BicliqueCoverResult {
    int value = 0;
    BicliqueCover witness;
};

/// Exact chromatic number with a proper witness using exactly that many
/// colors. Backtracking seeded by a maximum clique, scanning k upward from
/// the clique bound. Empty graph -> 0, edgeless -> 1.
ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget = default_budget());

/// Deterministic maximum clique (branch and bound on bitset candidate sets).
VertexSet max_clique(const Graph& g, std::uint64_t budget = default_budget());
int clique_number(const Graph& g, std::uint64_t budget = default_budget());

/// alpha(G) = omega of the complement.
int independence_number(const Graph& g, std::uint64_t budget = default_budget());

/// theta(G) = chi of the complement.
int clique_partition_number(const Graph& g, std::uint64_t budget = default_budget());

/// Exact minimum biclique cover of a bipartite graph, by memoized search
/// over uncovered-vertex masks. Desk scale (n <= 31 enforced).
BicliqueCoverResult biclique_cover_number(const Graph& g, const Bipartition& bp,
                                          std::uint64_t budget = default_budget());

bool validate_biclique_cover(const Graph& g, const Bipartition& bp, const BicliqueCover& cover);

/// With degrees sorted non-increasing d(x_1) >= ... >= d(x_n), the largest i
/// such that d(x_i) >= i-1. Upper bound on the b-chromatic number.
int m_bound(const Graph& g);

}  // namespace bchrom
