#include "bchrom/generators.hpp"

namespace bchrom {

namespace {

GeneratedInstance finish(Graph graph, std::vector<int> color, std::vector<int> reps,
                         int claimed_phi, const char* what) {
    auto cert = is_b_coloring(graph, Coloring(std::move(color)), claimed_phi);
    if (!cert)
        throw std::logic_error(std::string(what) + ": constructed coloring failed validation");
    for (int c = 0; c < claimed_phi; ++c) {
        int want = reps[static_cast<std::size_t>(c)];
        if (cert->coloring.color_of(want) != c)
            throw std::logic_error(std::string(what) + ": designated representative has wrong color");
        cert->representatives[static_cast<std::size_t>(c)] = want;
    }
    if (!validate_certificate(graph, *cert))
        throw std::logic_error(std::string(what) + ": designated representatives failed validation");
    return {std::move(graph), *std::move(cert), claimed_phi};
}

}  // namespace

GeneratedInstance gen_k1t_extremal(int t, int k) {
    if (t < 3) throw std::invalid_argument("gen_k1t_extremal: t must be >= 3");
    if (k < 2) throw std::invalid_argument("gen_k1t_extremal: k must be >= 2");

    const int copies = (t - 1) * (k - 1) + 1;     // one copy per color
    const int copy_size = 1 + (t - 1) * (k - 1);  // center + cliques
    const int n = copies * copy_size;

    auto center = [&](int copy) { return copy * copy_size; };
    // clique q of a copy occupies k-1 consecutive ids after the center
    auto clique_vertex = [&](int copy, int q, int j) {
        return copy * copy_size + 1 + q * (k - 1) + j;
    };

    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < copies; ++copy) {
        for (int q = 0; q < t - 1; ++q) {
            for (int j = 0; j < k - 1; ++j) {
                edges.emplace_back(center(copy), clique_vertex(copy, q, j));
                for (int j2 = j + 1; j2 < k - 1; ++j2)
                    edges.emplace_back(clique_vertex(copy, q, j), clique_vertex(copy, q, j2));
            }
        }
    }
    // chain: first vertex of clique 0 to the next copy's first vertex of
    // clique 1, never touching a center
    for (int copy = 0; copy + 1 < copies; ++copy)
        edges.emplace_back(clique_vertex(copy, 0, 0), clique_vertex(copy + 1, 1, 0));

    // center of copy i gets color i; its copy_size-1 clique vertices take
    // the remaining colors in a cyclic shift, so a chain edge never joins
    // equal colors (the shift distance k is strictly between 0 and copies)
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> reps(static_cast<std::size_t>(copies), -1);
    for (int copy = 0; copy < copies; ++copy) {
        color[static_cast<std::size_t>(center(copy))] = copy;
        reps[static_cast<std::size_t>(copy)] = center(copy);
        for (int j = 0; j < copy_size - 1; ++j)
            color[static_cast<std::size_t>(copy * copy_size + 1 + j)] = (copy + 1 + j) % copies;
    }

    return finish(Graph(n, edges), std::move(color), std::move(reps), copies,
                  "gen_k1t_extremal");
}

GeneratedInstance gen_clique_partition_extremal(int k, int w) {
    if (k < 2) throw std::invalid_argument("gen_clique_partition_extremal: k must be >= 2");
    if (w < 1 || w % (2 * k - 1) != 0)
        throw std::invalid_argument("gen_clique_partition_extremal: omega must be divisible by 2k-1");

    const int size_a = w / (2 * k - 1);
    const int size_bc = (k - 1) * size_a;
    const int base_b = k * size_a;
    const int base_c = base_b + k * size_bc;
    const int n = base_c + k * size_bc;

    auto a_vertex = [&](int i, int j) { return i * size_a + j; };
    auto b_vertex = [&](int i, int j) { return base_b + i * size_bc + j; };
    auto c_vertex = [&](int i, int j) { return base_c + i * size_bc + j; };

    std::vector<std::pair<int, int>> edges;
    // all A blocks together form one clique
    for (int u = 0; u < base_b; ++u)
        for (int v = u + 1; v < base_b; ++v) edges.emplace_back(u, v);
    for (int i = 0; i < k; ++i) {
        // B_i and C_i are cliques
        for (int j = 0; j < size_bc; ++j)
            for (int j2 = j + 1; j2 < size_bc; ++j2) {
                edges.emplace_back(b_vertex(i, j), b_vertex(i, j2));
                edges.emplace_back(c_vertex(i, j), c_vertex(i, j2));
            }
        // every A vertex joins every B vertex; A_i joins C_i only
        for (int j = 0; j < size_bc; ++j) {
            for (int u = 0; u < base_b; ++u) edges.emplace_back(u, b_vertex(i, j));
            for (int ja = 0; ja < size_a; ++ja)
                edges.emplace_back(a_vertex(i, ja), c_vertex(i, j));
        }
        // B_i joins C_j exactly when i != j
        for (int i2 = 0; i2 < k; ++i2) {
            if (i2 == i) continue;
            for (int j = 0; j < size_bc; ++j)
                for (int j2 = 0; j2 < size_bc; ++j2)
                    edges.emplace_back(b_vertex(i, j), c_vertex(i2, j2));
        }
    }

    // rainbow on A and B; C_i repeats B_i's colors, which is proper because
    // B_i and C_i are never adjacent
    const int claimed = base_b + k * size_bc;  // = k^2 w / (2k-1)
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> reps(static_cast<std::size_t>(claimed), -1);
    for (int v = 0; v < base_c; ++v) {
        color[static_cast<std::size_t>(v)] = v;
        reps[static_cast<std::size_t>(v)] = v;
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < size_bc; ++j)
            color[static_cast<std::size_t>(c_vertex(i, j))] = b_vertex(i, j);

    return finish(Graph(n, edges), std::move(color), std::move(reps), claimed,
                  "gen_clique_partition_extremal");
}

GeneratedInstance gen_bipartite_extremal(int p) {
    if (p < 3) throw std::invalid_argument("gen_bipartite_extremal: p must be >= 3");

    // ids: x_0..x_{p-2}, then y_0..y_{p-2}, then pendants z_1..z_{p-2}
    const int n = 3 * p - 4;
    auto x_vertex = [&](int i) { return i; };
    auto y_vertex = [&](int i) { return p - 1 + i; };
    auto z_vertex = [&](int i) { return 2 * (p - 1) + (i - 1); };

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p - 1; ++i)
        for (int j = 0; j < p - 1; ++j)
            if (!(i == j && i >= 1))  // the removed matching pairs the repeated colors
                edges.emplace_back(x_vertex(i), y_vertex(j));
    for (int i = 1; i <= p - 2; ++i) edges.emplace_back(z_vertex(i), y_vertex(i));

    // colors 0 and 1 sit on the adjacent pair x_0, y_0; colors 2..p-1 appear
    // once per side on the non-adjacent pairs x_i, y_i; pendants repeat 1
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    color[static_cast<std::size_t>(x_vertex(0))] = 0;
    color[static_cast<std::size_t>(y_vertex(0))] = 1;
    for (int i = 1; i <= p - 2; ++i) {
        color[static_cast<std::size_t>(x_vertex(i))] = i + 1;
        color[static_cast<std::size_t>(y_vertex(i))] = i + 1;
        color[static_cast<std::size_t>(z_vertex(i))] = 1;
    }
    std::vector<int> reps(static_cast<std::size_t>(p), -1);
    reps[0] = x_vertex(0);
    reps[1] = y_vertex(0);
    for (int i = 1; i <= p - 2; ++i) reps[static_cast<std::size_t>(i + 1)] = y_vertex(i);

    return finish(Graph(n, edges), std::move(color), std::move(reps), p,
                  "gen_bipartite_extremal");
}

}  // namespace bchrom
