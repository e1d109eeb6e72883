#pragma once

#include <cstdint>

#include "bchrom/graph.hpp"

namespace bchrom {

/// Erdos-Renyi sample; the (n, p, seed) triple fully determines the edge set.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Random bipartite graph on sides of size n1 and n2 (side one holds ids
/// 0..n1-1), each cross pair kept with probability p.
Graph random_bipartite(int n1, int n2, double p, std::uint64_t seed);

/// Complement of random_bipartite with the same parameters.
Graph random_cobipartite(int n1, int n2, double p, std::uint64_t seed);

/// Uniform random labeled tree (Pruefer decode).
Graph random_tree(int n, std::uint64_t seed);

}  // namespace bchrom
