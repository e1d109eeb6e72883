#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bchrom/vertex_set.hpp"

namespace bchrom {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency is stored as one bitset row per vertex; rows are symmetric and
/// irreflexive by construction. Safe to share across threads once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    int degree(int v) const {
        check(v);
        return adj_[static_cast<std::size_t>(v)].count();
    }

    int max_degree() const;

    const VertexSet& neighbors(int v) const {
        check(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

struct Bipartition {
    VertexSet X, Y;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // new id -> original id, ascending
};

/// DIMACS ".col" reader: `c` comments, one `p edge n m` header, `e u v`
/// lines with 1-based ids. Duplicate edges collapse; self-loops and ids out
/// of range are parse errors naming the offending line.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(const std::string& text);

void write_dimacs(std::ostream& out, const Graph& g, std::string_view comment = "");
std::string to_dimacs(const Graph& g, std::string_view comment = "");

Graph complement(const Graph& g);

/// Subgraph induced by s, vertices relabeled to 0..|s|-1 in ascending order
/// of the original ids; the mapping back is returned alongside.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// BFS two-coloring. Every component's root goes to X, so edgeless and
/// disconnected graphs get a consistent (if arbitrary) bipartition.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// True iff no vertex has t pairwise non-adjacent neighbors (no induced
/// star with t leaves). Requires t >= 2.
bool is_k1t_free(const Graph& g, int t);

}  // namespace bchrom
