#include "bchrom/bounds.hpp"

namespace bchrom {

std::optional<long long> bound_k1t(const Graph& g, int t, std::uint64_t budget) {
    if (t < 3) throw std::invalid_argument("bound_k1t: t must be >= 3");
    if (!is_k1t_free(g, t)) return std::nullopt;
    const long long chi = chromatic_number(g, budget).value;
    return (t - 1) * (chi - 1) + 1;
}

long long bound_clique_partition(const Graph& g, std::uint64_t budget) {
    if (g.order() == 0) throw std::invalid_argument("bound_clique_partition: empty graph");
    const long long k = clique_partition_number(g, budget);
    const long long w = clique_number(g, budget);
    return k * k * w / (2 * k - 1);
}

std::optional<long long> bound_cobipartite(const Graph& g, std::uint64_t budget) {
    if (!is_bipartite(complement(g))) return std::nullopt;
    const long long w = clique_number(g, budget);
    return 4 * w / 3;
}

std::optional<long long> bound_bipartite(const Graph& g, std::uint64_t budget) {
    auto bp = is_bipartite(g);
    if (!bp) return std::nullopt;
    const long long t = biclique_cover_number(g, *bp, budget).value;
    return (g.order() - t + 4) / 2;
}

BoundsReport bounds_report(const Graph& g, bool compute_exact, std::uint64_t budget) {
    if (g.order() == 0) throw std::invalid_argument("bounds_report: empty graph");
    BoundsReport report;

    const int chi = chromatic_number(g, budget).value;
    const long long k = clique_partition_number(g, budget);
    const long long w = clique_number(g, budget);

    for (int t : {3, 4, 5}) {
        BoundRecord rec;
        rec.name = "k1t_free_t" + std::to_string(t);
        rec.applicable = is_k1t_free(g, t);
        rec.hypothesis = rec.applicable ? "no induced star with " + std::to_string(t) + " leaves"
                                        : "contains an induced star with " + std::to_string(t) + " leaves";
        if (rec.applicable) rec.value = static_cast<long long>(t - 1) * (chi - 1) + 1;
        report.bounds.push_back(std::move(rec));
    }

    {
        BoundRecord rec;
        rec.name = "claw_free_2chi_minus_1";
        rec.applicable = is_k1t_free(g, 3);
        rec.hypothesis = rec.applicable ? "claw-free" : "contains an induced claw";
        if (rec.applicable) rec.value = 2LL * chi - 1;
        report.bounds.push_back(std::move(rec));
    }

    {
        BoundRecord rec;
        rec.name = "clique_partition";
        rec.applicable = true;
        rec.hypothesis = "theta=" + std::to_string(k) + ", omega=" + std::to_string(w);
        rec.value = k * k * w / (2 * k - 1);
        report.bounds.push_back(std::move(rec));
    }

    {
        BoundRecord rec;
        rec.name = "cobipartite";
        rec.applicable = is_bipartite(complement(g)).has_value();
        rec.hypothesis = rec.applicable ? "complement is bipartite, omega=" + std::to_string(w)
                                        : "complement is not bipartite";
        if (rec.applicable) rec.value = 4 * w / 3;
        report.bounds.push_back(std::move(rec));
    }

    {
        BoundRecord rec;
        rec.name = "bipartite_biclique";
        auto bp = is_bipartite(g);
        rec.applicable = bp.has_value();
        if (bp) {
            const long long t = biclique_cover_number(g, *bp, budget).value;
            rec.hypothesis = "bipartite, biclique number t=" + std::to_string(t);
            rec.value = (g.order() - t + 4) / 2;
        } else {
            rec.hypothesis = "not bipartite";
        }
        report.bounds.push_back(std::move(rec));
    }

    {
        BoundRecord rec;
        rec.name = "m_bound";
        rec.applicable = true;
        rec.hypothesis = "degree sequence";
        rec.value = m_bound(g);
        report.bounds.push_back(std::move(rec));
    }

    {
        BoundRecord rec;
        rec.name = "max_degree_plus_1";
        rec.applicable = true;
        rec.hypothesis = "always";
        rec.value = g.max_degree() + 1;
        report.bounds.push_back(std::move(rec));
    }

    if (compute_exact) {
        report.exact_phi = b_chromatic_number(g, budget).value;
        for (const auto& rec : report.bounds)
            if (rec.applicable && *rec.value < *report.exact_phi)
                report.violations.push_back(rec.name);
    }
    return report;
}

BoundsReport check_theorems(const Graph& g, std::uint64_t budget) {
    return bounds_report(g, true, budget);
}

}  // namespace bchrom
