#include "bchrom/invariants.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace bchrom {

namespace {

struct CliqueSearch {
    const Graph& g;
    BudgetCounter& budget;
    std::vector<int> current, best;

    void expand(VertexSet cands) {
        budget.tick("max_clique");
        if (current.size() > best.size()) best = current;
        while (!cands.empty()) {
            if (current.size() + static_cast<std::size_t>(cands.count()) <= best.size()) return;
            int v = cands.first();
            cands.remove(v);
            current.push_back(v);
            expand(cands & g.neighbors(v));
            current.pop_back();
        }
    }
};

// Vertices in descending degree order, ties by id. The fixed order keeps all
// search witnesses reproducible.
std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

Coloring dsatur(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<std::set<int>> neighbor_colors(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != -1) continue;
            int sat = static_cast<int>(neighbor_colors[static_cast<std::size_t>(v)].size());
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        int c = 0;
        while (neighbor_colors[static_cast<std::size_t>(best)].count(c)) ++c;
        color[static_cast<std::size_t>(best)] = c;
        for (int u : g.neighbors(best)) neighbor_colors[static_cast<std::size_t>(u)].insert(c);
    }
    return Coloring(color);
}

struct KColoring {
    const Graph& g;
    int k;
    BudgetCounter& budget;
    const std::vector<int>& order;
    std::vector<int>& color;

    bool run(std::size_t pos, int max_used) {
        budget.tick("chromatic_number");
        if (pos == order.size()) return true;
        int v = order[pos];
        std::uint64_t forbidden = 0;
        for (int u : g.neighbors(v)) {
            int cu = color[static_cast<std::size_t>(u)];
            if (cu != -1) forbidden |= 1ull << cu;
        }
        // colors beyond the first unused one are interchangeable
        int limit = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (forbidden >> c & 1) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (run(pos + 1, std::max(max_used, c))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace

VertexSet max_clique(const Graph& g, std::uint64_t budget) {
    // run the search on a copy relabeled by descending degree, so branching
    // follows the same deterministic order as the other solvers
    const std::vector<int> order = degree_order(g);
    std::vector<int> relabel(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) relabel[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges())
        edges.emplace_back(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)]);
    const Graph h(g.order(), edges);

    BudgetCounter counter(budget);
    CliqueSearch search{h, counter, {}, {}};
    search.expand(h.vertices());
    VertexSet out(g.order());
    for (int v : search.best) out.add(order[static_cast<std::size_t>(v)]);
    return out;
}

int clique_number(const Graph& g, std::uint64_t budget) {
    return max_clique(g, budget).count();
}

int independence_number(const Graph& g, std::uint64_t budget) {
    return clique_number(complement(g), budget);
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget) {
    const int n = g.order();
    if (n == 0) return {0, Coloring(std::vector<int>{})};

    BudgetCounter counter(budget);
    VertexSet clique = max_clique(g, budget);
    const int lower = clique.count();
    Coloring greedy = dsatur(g);
    if (greedy.num_colors() == lower) return {lower, greedy};

    // clique vertices first, precolored; remaining colors appear in
    // first-use order, so color permutations are never revisited
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int v : degree_order(g))
        if (clique.contains(v)) order.push_back(v);
    for (int v : degree_order(g))
        if (!clique.contains(v)) order.push_back(v);

    for (int k = lower; k < greedy.num_colors(); ++k) {
        if (k > 64) throw std::invalid_argument("chromatic_number: exact search limited to 64 colors");
        std::vector<int> color(static_cast<std::size_t>(n), -1);
        for (int i = 0; i < lower; ++i) color[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        KColoring search{g, k, counter, order, color};
        if (search.run(static_cast<std::size_t>(lower), lower - 1))
            return {k, Coloring(color)};
    }
    return {greedy.num_colors(), greedy};
}

int clique_partition_number(const Graph& g, std::uint64_t budget) {
    return chromatic_number(complement(g), budget).value;
}

int m_bound(const Graph& g) {
    std::vector<int> degrees(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) degrees[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(degrees.rbegin(), degrees.rend());
    int m = 0;
    for (int i = 1; i <= g.order(); ++i)
        if (degrees[static_cast<std::size_t>(i - 1)] >= i - 1) m = i;
    return m;
}

namespace {

void require_valid_bipartition(const Graph& g, const Bipartition& bp) {
    const int n = g.order();
    if (bp.X.universe() != n || bp.Y.universe() != n)
        throw std::invalid_argument("bipartition: universe mismatch");
    if (bp.X.intersects(bp.Y)) throw std::invalid_argument("bipartition: sides overlap");
    if ((bp.X | bp.Y) != VertexSet::full(n))
        throw std::invalid_argument("bipartition: sides do not cover all vertices");
    for (auto [u, v] : g.edges())
        if (bp.X.contains(u) == bp.X.contains(v))
            throw std::invalid_argument("bipartition: edge inside one side");
}

using Mask = std::uint32_t;

struct BicliqueSearch {
    const Graph& g;
    BudgetCounter& budget;
    Mask x_mask = 0;
    std::vector<Mask> nbr;  // adjacency as masks
    std::unordered_map<Mask, int> memo;
    std::unordered_map<Mask, std::pair<Mask, Mask>> choice;  // mask -> best block (own side, other side)

    int solve(Mask uncovered) {
        if (uncovered == 0) return 0;
        if (auto it = memo.find(uncovered); it != memo.end()) return it->second;

        const int v = std::countr_zero(uncovered);
        const Mask vbit = Mask{1} << v;
        const Mask own_side = (x_mask & vbit) ? x_mask : ~x_mask;

        // degenerate single-vertex block
        int best = 1 + solve(uncovered & ~vbit);
        Mask best_own = vbit, best_other = 0;

        const Mask other_pool = nbr[static_cast<std::size_t>(v)] & uncovered & ~own_side;
        for (Mask s2 = other_pool; s2 != 0; s2 = (s2 - 1) & other_pool) {
            Mask common = uncovered & own_side;
            for (Mask rest = s2; rest != 0; rest &= rest - 1)
                common &= nbr[static_cast<std::size_t>(std::countr_zero(rest))];
            // v is adjacent to everything in s2, so v survives in common
            const Mask extra_pool = common & ~vbit;
            for (Mask s1x = extra_pool;; s1x = (s1x - 1) & extra_pool) {
                budget.tick("biclique_cover_number");
                const Mask s1 = s1x | vbit;
                int sub = 1 + solve(uncovered & ~(s1 | s2));
                if (sub < best) {
                    best = sub;
                    best_own = s1;
                    best_other = s2;
                }
                if (s1x == 0) break;
            }
        }
        memo.emplace(uncovered, best);
        choice.emplace(uncovered, std::make_pair(best_own, best_other));
        return best;
    }
};

VertexSet mask_to_set(Mask m, int n) {
    VertexSet s(n);
    for (; m != 0; m &= m - 1) s.add(std::countr_zero(m));
    return s;
}

}  // namespace

BicliqueCoverResult biclique_cover_number(const Graph& g, const Bipartition& bp,
                                          std::uint64_t budget) {
    require_valid_bipartition(g, bp);
    const int n = g.order();
    if (n > 31) throw std::invalid_argument("biclique_cover_number: desk-scale limit is n <= 31");
    if (n == 0) return {0, {}};

    BudgetCounter counter(budget);
    BicliqueSearch search{g, counter, 0, {}, {}, {}};
    for (int v : bp.X) search.x_mask |= Mask{1} << v;
    search.nbr.resize(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        search.nbr[static_cast<std::size_t>(u)] |= Mask{1} << v;
        search.nbr[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }

    const Mask all = n == 31 ? 0x7fffffffu : (Mask{1} << n) - 1;
    int value = search.solve(all);

    BicliqueCover cover;
    for (Mask left = all; left != 0;) {
        auto [own, other] = search.choice.at(left);
        Mask block = own | other;
        // normalize: s1 on the X side, s2 on the Y side
        cover.blocks.emplace_back(mask_to_set(block & search.x_mask, n),
                                  mask_to_set(block & ~search.x_mask, n));
        left &= ~block;
    }
    return {value, std::move(cover)};
}

bool validate_biclique_cover(const Graph& g, const Bipartition& bp, const BicliqueCover& cover) {
    require_valid_bipartition(g, bp);
    VertexSet covered(g.order());
    for (const auto& [s1, s2] : cover.blocks) {
        if (s1.universe() != g.order() || s2.universe() != g.order()) return false;
        if (!s1.is_subset_of(bp.X) || !s2.is_subset_of(bp.Y)) return false;
        if (s1.intersects(covered) || s2.intersects(covered)) return false;
        if (s1.empty() && s2.empty()) return false;
        if (s1.empty() || s2.empty()) {
            // degenerate block: exactly one vertex
            if (s1.count() + s2.count() != 1) return false;
        } else {
            for (int u : s1)
                for (int v : s2)
                    if (!g.has_edge(u, v)) return false;
        }
        covered |= s1;
        covered |= s2;
    }
    return covered == VertexSet::full(g.order());
}

}  // namespace bchrom
