#include "bchrom/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace bchrom {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }
    for (int v = 0; v < n; ++v) edge_count_ += static_cast<std::size_t>(degree(v));
    edge_count_ /= 2;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

[[noreturn]] void fail_line(int line_no, const std::string& what) {
    throw parse_error("DIMACS line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    long long declared_edges = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail_line(line_no, "duplicate problem line");
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_edges) || fmt != "edge" || n < 0 || declared_edges < 0)
                fail_line(line_no, "malformed header, expected 'p edge <n> <m>'");
            std::string extra;
            if (ls >> extra) fail_line(line_no, "trailing tokens after header");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) fail_line(line_no, "edge before 'p edge' header");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail_line(line_no, "malformed edge line");
            std::string extra;
            if (ls >> extra) fail_line(line_no, "trailing tokens after edge");
            if (u < 1 || u > n || v < 1 || v > n) fail_line(line_no, "edge endpoint out of range");
            if (u == v) fail_line(line_no, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            fail_line(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) throw parse_error("DIMACS: missing 'p edge' header");
    return Graph(n, edges);
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g, std::string_view comment) {
    out << "c " << (comment.empty() ? std::string_view("bchrom graph") : comment) << "\n";
    out << "p edge " << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

std::string to_dimacs(const Graph& g, std::string_view comment) {
    std::ostringstream out;
    write_dimacs(out, g, comment);
    return out.str();
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: vertex set universe mismatch");
    std::vector<int> keep = s.to_vector();
    std::vector<int> new_id(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_id[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v && s.contains(v))
                edges.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
    return {Graph(static_cast<int>(keep.size()), edges), std::move(keep)};
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    VertexSet set(g.order());
    for (int v : s) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        set.add(v);
    }
    return induced_subgraph(g, set);
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::deque<int> queue;
    for (int root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) continue;
        side[static_cast<std::size_t>(root)] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (side[static_cast<std::size_t>(v)] == -1) {
                    side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    return std::nullopt;  // odd cycle
                }
            }
        }
    }
    Bipartition bp{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) (side[static_cast<std::size_t>(v)] == 0 ? bp.X : bp.Y).add(v);
    return bp;
}

namespace {

// Does `pool` contain `want` pairwise non-adjacent vertices?
bool has_independent_set(const Graph& g, VertexSet pool, int want) {
    if (want <= 0) return true;
    if (pool.count() < want) return false;
    int v = pool.first();
    pool.remove(v);
    VertexSet without_nbrs = pool;
    without_nbrs.subtract(g.neighbors(v));
    if (has_independent_set(g, without_nbrs, want - 1)) return true;
    return has_independent_set(g, pool, want);
}

}  // namespace

bool is_k1t_free(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("is_k1t_free: t must be >= 2");
    for (int v = 0; v < g.order(); ++v)
        if (has_independent_set(g, g.neighbors(v), t)) return false;
    return true;
}

}  // namespace bchrom
