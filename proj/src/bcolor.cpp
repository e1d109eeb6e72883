#include "bchrom/bcolor.hpp"

#include <algorithm>

namespace bchrom {

namespace {

// Extension search: representatives are fixed and precolored; every other
// vertex still needs a color, and every representative's neighborhood must
// end up containing all other colors.
struct ExtendSearch {
    const Graph& g;
    int k;
    BudgetCounter& budget;
    const std::vector<int>& reps;  // reps[i] has color i
    std::vector<int> color;        // per vertex, -1 = uncolored
    std::uint64_t all_colors;

    explicit ExtendSearch(const Graph& graph, int colors, BudgetCounter& counter,
                          const std::vector<int>& chosen)
        : g(graph), k(colors), budget(counter), reps(chosen),
          color(static_cast<std::size_t>(graph.order()), -1),
          all_colors(colors == 64 ? ~0ull : (1ull << colors) - 1) {
        for (int i = 0; i < k; ++i) color[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] = i;
    }

    std::uint64_t allowed_mask(int v) const {
        std::uint64_t forbidden = 0;
        for (int u : g.neighbors(v)) {
            int cu = color[static_cast<std::size_t>(u)];
            if (cu != -1) forbidden |= 1ull << cu;
        }
        return all_colors & ~forbidden;
    }

    bool run() {
        budget.tick("exists_b_coloring");

        // representative feasibility: every color a representative has not
        // seen yet must still be placeable on one of its uncolored neighbors
        for (int i = 0; i < k; ++i) {
            const int r = reps[static_cast<std::size_t>(i)];
            std::uint64_t seen = 1ull << i;
            std::vector<int> open;
            for (int u : g.neighbors(r)) {
                int cu = color[static_cast<std::size_t>(u)];
                if (cu == -1)
                    open.push_back(u);
                else
                    seen |= 1ull << cu;
            }
            std::uint64_t missing = all_colors & ~seen;
            if (std::popcount(missing) > static_cast<int>(open.size())) return false;
            for (std::uint64_t rest = missing; rest != 0; rest &= rest - 1) {
                const int c = std::countr_zero(rest);
                bool placeable = false;
                for (int u : open)
                    if (allowed_mask(u) >> c & 1) {
                        placeable = true;
                        break;
                    }
                if (!placeable) return false;
            }
        }

        // most-constrained uncolored vertex, ties by id
        int pick = -1, pick_options = k + 1;
        std::uint64_t pick_mask = 0;
        for (int v = 0; v < g.order(); ++v) {
            if (color[static_cast<std::size_t>(v)] != -1) continue;
            std::uint64_t mask = allowed_mask(v);
            int options = std::popcount(mask);
            if (options == 0) return false;
            if (options < pick_options) {
                pick = v;
                pick_options = options;
                pick_mask = mask;
            }
        }
        if (pick == -1) return true;  // everything colored, all reps satisfied

        for (std::uint64_t rest = pick_mask; rest != 0; rest &= rest - 1) {
            color[static_cast<std::size_t>(pick)] = std::countr_zero(rest);
            if (run()) return true;
        }
        color[static_cast<std::size_t>(pick)] = -1;
        return false;
    }
};

}  // namespace

std::optional<BColoringCertificate> exists_b_coloring(const Graph& g, int k,
                                                      std::uint64_t budget) {
    if (k < 1) throw std::invalid_argument("exists_b_coloring: k must be >= 1");
    const int n = g.order();
    if (k > n) return std::nullopt;
    if (k > 64) throw std::invalid_argument("exists_b_coloring: desk-scale limit is 64 colors");

    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= k - 1) candidates.push_back(v);
    if (static_cast<int>(candidates.size()) < k) return std::nullopt;

    BudgetCounter counter(budget);

    // lexicographic k-combinations of candidates; color i goes to the i-th
    // smallest chosen representative, which rules out color renamings
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(candidates.size());

    while (true) {
        counter.tick("exists_b_coloring");
        std::vector<int> reps(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) reps[static_cast<std::size_t>(i)] = candidates[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];

        ExtendSearch search(g, k, counter, reps);
        if (search.run()) {
            Coloring coloring(search.color);
            auto cert = is_b_coloring(g, coloring, k);
            if (!cert)
                throw std::logic_error("exists_b_coloring: found coloring failed revalidation");
            return cert;
        }

        // advance combination
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

PhiResult b_chromatic_number(const Graph& g, std::uint64_t budget) {
    if (g.order() == 0) throw std::invalid_argument("b_chromatic_number: empty graph");
    const int chi = chromatic_number(g, budget).value;
    const int m = m_bound(g);
    for (int k = m; k >= chi; --k)
        if (auto cert = exists_b_coloring(g, k, budget)) return {k, *std::move(cert)};
    // an optimal proper coloring is always a b-coloring, so k = chi succeeds
    throw std::logic_error("b_chromatic_number: no b-coloring found down to chi");
}

}  // namespace bchrom
