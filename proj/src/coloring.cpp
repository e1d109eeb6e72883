#include "bchrom/coloring.hpp"

#include <algorithm>

namespace bchrom {

Coloring::Coloring(std::vector<int> assignment) : assignment_(std::move(assignment)) {
    int max_color = -1;
    for (int c : assignment_) {
        if (c < 0) throw std::invalid_argument("Coloring: vertex without a color");
        max_color = std::max(max_color, c);
    }
    num_colors_ = max_color + 1;
    std::vector<char> used(static_cast<std::size_t>(num_colors_), 0);
    for (int c : assignment_) used[static_cast<std::size_t>(c)] = 1;
    for (char u : used)
        if (!u) throw std::invalid_argument("Coloring: unused color index");
}

std::vector<int> Coloring::class_sizes() const {
    std::vector<int> sizes(static_cast<std::size_t>(num_colors_), 0);
    for (int c : assignment_) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

std::vector<std::vector<int>> Coloring::color_classes() const {
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(num_colors_));
    for (int v = 0; v < order(); ++v)
        classes[static_cast<std::size_t>(assignment_[static_cast<std::size_t>(v)])].push_back(v);
    return classes;
}

std::map<int, int> Coloring::class_size_histogram() const {
    std::map<int, int> hist;
    for (int s : class_sizes()) ++hist[s];
    return hist;
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.order() != g.order())
        throw std::invalid_argument("is_proper: coloring does not cover all vertices");
    for (auto [u, v] : g.edges())
        if (c.color_of(u) == c.color_of(v)) return false;
    return true;
}

std::vector<VertexSet> representatives(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) throw std::invalid_argument("representatives: coloring is not proper");
    const int b = c.num_colors();
    std::vector<VertexSet> reps(static_cast<std::size_t>(b), VertexSet(g.order()));
    std::vector<char> seen(static_cast<std::size_t>(b), 0);
    for (int v = 0; v < g.order(); ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        int distinct = 0;
        for (int u : g.neighbors(v)) {
            int cu = c.color_of(u);
            if (!seen[static_cast<std::size_t>(cu)]) {
                seen[static_cast<std::size_t>(cu)] = 1;
                ++distinct;
            }
        }
        // proper coloring: own color never appears among neighbors
        if (distinct == b - 1) reps[static_cast<std::size_t>(c.color_of(v))].add(v);
    }
    return reps;
}

std::optional<BColoringCertificate> is_b_coloring(const Graph& g, const Coloring& c, int b) {
    if (c.order() != g.order())
        throw std::invalid_argument("is_b_coloring: coloring does not cover all vertices");
    if (b < 1 || c.num_colors() != b) return std::nullopt;
    if (!is_proper(g, c)) return std::nullopt;
    auto reps = representatives(g, c);
    std::vector<int> chosen(static_cast<std::size_t>(b), -1);
    for (int color = 0; color < b; ++color) {
        int r = reps[static_cast<std::size_t>(color)].first();
        if (r == -1) return std::nullopt;
        chosen[static_cast<std::size_t>(color)] = r;
    }
    return BColoringCertificate{c, std::move(chosen)};
}

bool validate_certificate(const Graph& g, const BColoringCertificate& cert) {
    const int b = cert.coloring.num_colors();
    if (static_cast<int>(cert.representatives.size()) != b) return false;
    if (cert.coloring.order() != g.order()) return false;
    if (!is_proper(g, cert.coloring)) return false;
    auto reps = representatives(g, cert.coloring);
    for (int color = 0; color < b; ++color) {
        int r = cert.representatives[static_cast<std::size_t>(color)];
        if (r < 0 || r >= g.order()) return false;
        if (cert.coloring.color_of(r) != color) return false;
        if (!reps[static_cast<std::size_t>(color)].contains(r)) return false;
    }
    return true;
}

}  // namespace bchrom
