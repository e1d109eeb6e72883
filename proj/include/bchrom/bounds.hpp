#pragma once

#include <optional>
#include <string>

#include "bchrom/bcolor.hpp"

namespace bchrom {

struct BoundRecord {
    std::string name;
    bool applicable = false;
    std::string hypothesis;
    std::optional<long long> value;  // present iff applicable
};

struct BoundsReport {
    std::vector<BoundRecord> bounds;
    std::optional<int> exact_phi;
    std::vector<std::string> violations;  // bounds strictly below exact phi; must stay empty
};

/// (t-1)(chi-1)+1 when g has no induced star with t leaves; nullopt otherwise.
/// Requires t >= 3 (with t = 2 the hypothesis forces a complete graph).
std::optional<long long> bound_k1t(const Graph& g, int t, std::uint64_t budget = default_budget());

/// floor(k^2 * omega / (2k-1)) with k the clique partition number. Applies
/// to every graph.
long long bound_clique_partition(const Graph& g, std::uint64_t budget = default_budget());

/// floor(4 * omega / 3) when the complement is bipartite; nullopt otherwise.
std::optional<long long> bound_cobipartite(const Graph& g, std::uint64_t budget = default_budget());

/// floor((n - t + 4) / 2) with t the biclique cover number, when g is
/// bipartite; nullopt otherwise.
std::optional<long long> bound_bipartite(const Graph& g, std::uint64_t budget = default_budget());

/// Evaluates every bound (star-free for t in {3,4,5}, the claw-free special
/// case 2*chi-1, clique partition, co-bipartite, bipartite, m(G), Delta+1),
/// optionally computes exact phi and records any bound it violates.
BoundsReport bounds_report(const Graph& g, bool compute_exact,
                           std::uint64_t budget = default_budget());

/// bounds_report with exact phi; the violations list is the theorem check.
BoundsReport check_theorems(const Graph& g, std::uint64_t budget = default_budget());

}  // namespace bchrom
