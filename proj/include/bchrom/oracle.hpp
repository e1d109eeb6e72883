#pragma once

#include "bchrom/graph.hpp"

namespace bchrom::oracle {

// Naive reference implementations used by the test suites and `selftest` to
// cross-check the exact solvers. Deliberately brute-force and independent of
// the search code: plain enumeration, no pruning beyond feasibility.

/// Enumerates all k^n assignments; true iff one is a proper coloring that
/// uses all k colors and gives every color class a representative.
bool exists_b_coloring_brute(const Graph& g, int k);

/// Largest k up to m(G) passing exists_b_coloring_brute.
int max_b_coloring(const Graph& g);

/// Minimum biclique cover by checking every set partition of the vertices.
int min_biclique_cover(const Graph& g, const Bipartition& bp);

/// Proper k-colorability by exhaustive assignment.
bool exists_proper_coloring_brute(const Graph& g, int k);

/// Smallest k with a proper k-coloring (0 for the empty graph).
int chromatic_number_brute(const Graph& g);

/// Looks for an odd cycle by checking every odd-size vertex subset for a
/// spanning cycle. Usable up to n ~ 9.
bool has_odd_cycle(const Graph& g);

/// Checks every (center, t-subset of its neighborhood) pair for an induced
/// star with t leaves.
bool has_induced_star(const Graph& g, int t);

}  // namespace bchrom::oracle
