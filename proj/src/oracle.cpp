#include "bchrom/oracle.hpp"

#include <algorithm>

#include "bchrom/invariants.hpp"

namespace bchrom::oracle {

namespace {

bool proper(const Graph& g, const std::vector<int>& color) {
    for (auto [u, v] : g.edges())
        if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return false;
    return true;
}

bool surjective(const std::vector<int>& color, int k) {
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    for (int c : color) used[static_cast<std::size_t>(c)] = 1;
    return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

bool every_class_dominates(const Graph& g, const std::vector<int>& color, int k) {
    std::vector<char> class_ok(static_cast<std::size_t>(k), 0);
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < g.order(); ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        int distinct = 0;
        for (int u : g.neighbors(v)) {
            int cu = color[static_cast<std::size_t>(u)];
            if (!seen[static_cast<std::size_t>(cu)]) {
                seen[static_cast<std::size_t>(cu)] = 1;
                ++distinct;
            }
        }
        if (distinct == k - 1) class_ok[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = 1;
    }
    return std::all_of(class_ok.begin(), class_ok.end(), [](char u) { return u != 0; });
}

}  // namespace

bool exists_b_coloring_brute(const Graph& g, int k) {
    const int n = g.order();
    if (k < 1 || k > n) return false;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    while (true) {
        if (proper(g, color) && surjective(color, k) && every_class_dominates(g, color, k))
            return true;
        int i = 0;
        while (i < n && color[static_cast<std::size_t>(i)] == k - 1) color[static_cast<std::size_t>(i++)] = 0;
        if (i == n) return false;
        ++color[static_cast<std::size_t>(i)];
    }
}

int max_b_coloring(const Graph& g) {
    int best = 0;
    for (int k = 1; k <= m_bound(g); ++k)
        if (exists_b_coloring_brute(g, k)) best = k;
    return best;
}

namespace {

struct PartitionSearch {
    const Graph& g;
    const Bipartition& bp;
    std::vector<std::vector<int>> parts;
    int best;

    bool part_is_biclique(const std::vector<int>& part) const {
        if (part.size() == 1) return true;
        std::vector<int> xs, ys;
        for (int v : part) (bp.X.contains(v) ? xs : ys).push_back(v);
        if (xs.empty() || ys.empty()) return false;
        for (int x : xs)
            for (int y : ys)
                if (!g.has_edge(x, y)) return false;
        return true;
    }

    void run(int v) {
        if (static_cast<int>(parts.size()) >= best) return;
        if (v == g.order()) {
            for (const auto& part : parts)
                if (!part_is_biclique(part)) return;
            best = static_cast<int>(parts.size());
            return;
        }
        const std::size_t existing = parts.size();  // recursion grows the vector
        for (std::size_t i = 0; i < existing; ++i) {
            parts[i].push_back(v);
            run(v + 1);
            parts[i].pop_back();
        }
        parts.push_back({v});
        run(v + 1);
        parts.pop_back();
    }
};

}  // namespace

int min_biclique_cover(const Graph& g, const Bipartition& bp) {
    if (g.order() == 0) return 0;
    PartitionSearch search{g, bp, {}, g.order() + 1};
    search.run(0);
    return search.best;
}

namespace {

bool color_rest(const Graph& g, int k, std::vector<int>& color, int v) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v && color[static_cast<std::size_t>(u)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (color_rest(g, k, color, v + 1)) return true;
    }
    return false;
}

}  // namespace

bool exists_proper_coloring_brute(const Graph& g, int k) {
    if (k < 0) return false;
    if (g.order() == 0) return true;
    if (k == 0) return false;
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    return color_rest(g, k, color, 0);
}

int chromatic_number_brute(const Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1; k <= g.order(); ++k)
        if (exists_proper_coloring_brute(g, k)) return k;
    return g.order();
}

namespace {

bool subset_has_spanning_cycle(const Graph& g, const std::vector<int>& subset) {
    std::vector<int> rest(subset.begin() + 1, subset.end());
    std::sort(rest.begin(), rest.end());
    do {
        bool ok = g.has_edge(subset[0], rest.front()) && g.has_edge(subset[0], rest.back());
        for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
            ok = g.has_edge(rest[i], rest[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

template <class Fn>
bool any_combination(const std::vector<int>& pool, int want, std::vector<int>& chosen, std::size_t from,
                     const Fn& fn) {
    if (static_cast<int>(chosen.size()) == want) return fn(chosen);
    for (std::size_t i = from; i < pool.size(); ++i) {
        chosen.push_back(pool[i]);
        if (any_combination(pool, want, chosen, i + 1, fn)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool has_odd_cycle(const Graph& g) {
    std::vector<int> all;
    for (int v = 0; v < g.order(); ++v) all.push_back(v);
    for (int len = 3; len <= g.order(); len += 2) {
        std::vector<int> chosen;
        if (any_combination(all, len, chosen, 0,
                            [&](const std::vector<int>& s) { return subset_has_spanning_cycle(g, s); }))
            return true;
    }
    return false;
}

bool has_induced_star(const Graph& g, int t) {
    for (int center = 0; center < g.order(); ++center) {
        std::vector<int> nbrs = g.neighbors(center).to_vector();
        std::vector<int> chosen;
        if (any_combination(nbrs, t, chosen, 0, [&](const std::vector<int>& leaves) {
                for (std::size_t i = 0; i < leaves.size(); ++i)
                    for (std::size_t j = i + 1; j < leaves.size(); ++j)
                        if (g.has_edge(leaves[i], leaves[j])) return false;
                return true;
            }))
            return true;
    }
    return false;
}

}  // namespace bchrom::oracle
