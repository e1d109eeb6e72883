#include "bchrom/random_graphs.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace bchrom {

namespace {

// 53-bit uniform draw in [0, 1); identical across standard libraries, so
// reports stay byte-stable everywhere
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_graph: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph random_bipartite(int n1, int n2, double p, std::uint64_t seed) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("random_bipartite: negative side size");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("random_bipartite: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v)
            if (uniform01(rng) < p) edges.emplace_back(u, n1 + v);
    return Graph(n1 + n2, edges);
}

Graph random_cobipartite(int n1, int n2, double p, std::uint64_t seed) {
    return complement(random_bipartite(n1, n2, p, seed));
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_tree: negative n");
    if (n <= 1) return Graph(n);
    if (n == 2) return Graph(2, {{0, 1}});

    std::mt19937_64 rng(seed);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (auto& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : pruefer) ++degree[static_cast<std::size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(x)];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) (a == -1 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

}  // namespace bchrom
