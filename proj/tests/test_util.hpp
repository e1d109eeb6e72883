#pragma once

#include "bchrom/graph.hpp"

inline bchrom::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return bchrom::Graph(n, edges);
}

inline bchrom::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return bchrom::Graph(n, edges);
}

inline bchrom::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return bchrom::Graph(n, edges);
}

inline bchrom::Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return bchrom::Graph(a + b, edges);
}

// center 0, leaves 1..leaves
inline bchrom::Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return bchrom::Graph(leaves + 1, edges);
}

// outer 5-cycle 0..4, inner pentagram 5..9, spokes i -> i+5
inline bchrom::Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return bchrom::Graph(10, edges);
}
