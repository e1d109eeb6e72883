#include "bchrom/selftest.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include "bchrom/ab_family.hpp"
#include "bchrom/bounds.hpp"
#include "bchrom/generators.hpp"
#include "bchrom/harness.hpp"
#include "bchrom/json_io.hpp"
#include "bchrom/oracle.hpp"
#include "bchrom/random_graphs.hpp"

namespace bchrom {

namespace {

constexpr std::uint64_t kSeedBase = 0xb5eed0000ull;
constexpr double kProbs[] = {0.15, 0.3, 0.5, 0.7, 0.85};

// All 1024 labeled graphs on 5 vertices, indexed by edge mask.
Graph graph_on_5(int mask) {
    static const std::pair<int, int> pairs[10] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                                  {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 10; ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
    return Graph(5, edges);
}

struct Check {
    int failures = 0;
    int checked = 0;
    std::ostringstream notes;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failures;
            if (failures <= 5) notes << "; FAILED: " << what;
        }
    }
};

void criterion_sandwich(std::uint64_t budget, Check& c) {
    auto check_graph = [&](const Graph& g, const std::string& tag) {
        const int chi = chromatic_number(g, budget).value;
        const int phi = b_chromatic_number(g, budget).value;
        const int m = m_bound(g);
        const int d1 = g.max_degree() + 1;
        c.expect(chi <= phi && phi <= m && m <= d1,
                 tag + ": chi=" + std::to_string(chi) + " phi=" + std::to_string(phi) +
                     " m=" + std::to_string(m) + " D+1=" + std::to_string(d1));
    };
    for (int mask = 0; mask < 1024; ++mask) check_graph(graph_on_5(mask), "n5 mask " + std::to_string(mask));
    for (int i = 0; i < 300; ++i) {
        const int n = 6 + i % 4;
        check_graph(random_graph(n, kProbs[i % 5], kSeedBase + 100 + i),
                    "random " + std::to_string(i));
    }
}

void criterion_star_free(std::uint64_t budget, Check& c) {
    int found = 0;
    for (std::uint64_t attempt = 0; found < 200 && attempt < 100000; ++attempt) {
        const int n = 4 + static_cast<int>(attempt % 6);
        const double p = kProbs[attempt % 5];
        Graph g = random_graph(n, p, kSeedBase + 20000 + attempt);
        if (!is_k1t_free(g, 3)) continue;
        ++found;
        const int chi = chromatic_number(g, budget).value;
        const int phi = b_chromatic_number(g, budget).value;
        c.expect(phi <= 2 * chi - 1, "claw-free sample " + std::to_string(found));
    }
    c.expect(found == 200, "collected only " + std::to_string(found) + " claw-free samples");

    for (auto [t, k] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
        const std::string tag = "chain(" + std::to_string(t) + "," + std::to_string(k) + ")";
        auto inst = gen_k1t_extremal(t, k);
        c.expect(inst.claimed_phi == (t - 1) * (k - 1) + 1, tag + " claimed value");
        c.expect(validate_certificate(inst.graph, inst.certificate), tag + " certificate");
        c.expect(inst.certificate.coloring.num_colors() == inst.claimed_phi, tag + " colors");
        c.expect(is_k1t_free(inst.graph, t), tag + " star-freeness");
        c.expect(chromatic_number(inst.graph, budget).value == k, tag + " chi");
        // certificate (lower bound) + theorem bound at chi=k (upper) pin phi
        auto bound = bound_k1t(inst.graph, t, budget);
        c.expect(bound && *bound == inst.claimed_phi, tag + " bound equality");
    }
}

void criterion_clique_partition(std::uint64_t budget, Check& c) {
    for (int i = 0; i < 300; ++i) {
        const int n = 3 + i % 7;
        Graph g = random_graph(n, kProbs[i % 5], kSeedBase + 40000 + i);
        const long long k = clique_partition_number(g, budget);
        const long long w = clique_number(g, budget);
        const int phi = b_chromatic_number(g, budget).value;
        c.expect(phi <= k * k * w / (2 * k - 1), "sample " + std::to_string(i));
    }
    for (auto [k, w] : {std::pair{2, 3}, {2, 6}, {3, 5}}) {
        const std::string tag = "layered(" + std::to_string(k) + "," + std::to_string(w) + ")";
        auto inst = gen_clique_partition_extremal(k, w);
        c.expect(inst.claimed_phi == k * k * w / (2 * k - 1), tag + " claimed value");
        c.expect(validate_certificate(inst.graph, inst.certificate), tag + " certificate");
        c.expect(clique_number(inst.graph, budget) == w, tag + " omega");
        c.expect(clique_partition_number(inst.graph, budget) == k, tag + " theta");
        c.expect(bound_clique_partition(inst.graph, budget) == inst.claimed_phi,
                 tag + " bound equality");
    }
}

void criterion_cobipartite(std::uint64_t budget, Check& c) {
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + i % 9;
        Graph g = random_cobipartite(n / 2, n - n / 2, kProbs[i % 5], kSeedBase + 60000 + i);
        const std::string tag = "cobip sample " + std::to_string(i);
        const int chi = chromatic_number(g, budget).value;
        auto phi = b_chromatic_number(g, budget);
        const long long w = clique_number(g, budget);
        c.expect(phi.value <= 4 * w / 3, tag + " bound");
        for (int b = chi; b <= g.max_degree() + 1; ++b) {
            const bool by_search = exists_b_coloring(g, b, budget).has_value();
            const bool by_family = is_in_ab(g, b, budget).has_value();
            c.expect(by_search == by_family, tag + " iff at b=" + std::to_string(b));
        }
        c.expect(phi_via_ab(g, budget).value == phi.value, tag + " phi agreement");
    }
}

void criterion_bipartite(std::uint64_t budget, Check& c) {
    for (int i = 0; i < 200; ++i) {
        const int n = 4 + i % 9;
        Graph g = random_bipartite(n / 2, n - n / 2, kProbs[i % 5], kSeedBase + 80000 + i);
        auto bp = is_bipartite(g);
        c.expect(bp.has_value(), "sample " + std::to_string(i) + " bipartite");
        const long long t = biclique_cover_number(g, *bp, budget).value;
        const int phi = b_chromatic_number(g, budget).value;
        c.expect(phi <= (g.order() - t + 4) / 2, "sample " + std::to_string(i) + " bound");
    }
    for (int p : {3, 4, 5}) {
        const std::string tag = "pendant(" + std::to_string(p) + ")";
        auto inst = gen_bipartite_extremal(p);
        c.expect(inst.graph.order() == 3 * p - 4, tag + " order");
        auto bp = is_bipartite(inst.graph);
        c.expect(bp.has_value(), tag + " bipartite");
        const int t = biclique_cover_number(inst.graph, *bp, budget).value;
        c.expect(t == p - 1, tag + " biclique number");
        c.expect(validate_certificate(inst.graph, inst.certificate), tag + " certificate");
        c.expect(inst.certificate.coloring.num_colors() == p, tag + " colors");
        c.expect(inst.graph.max_degree() == p - 1, tag + " max degree");
        c.expect(inst.claimed_phi == (inst.graph.order() - t + 4) / 2, tag + " bound equality");
    }
}

void criterion_oracles(std::uint64_t budget, Check& c) {
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + i % 6;
        Graph g = random_graph(n, kProbs[i % 5], kSeedBase + 100000 + i);
        c.expect(b_chromatic_number(g, budget).value == oracle::max_b_coloring(g),
                 "phi oracle sample " + std::to_string(i));
    }
    std::vector<Graph> biclique_cases;
    for (int i = 0; i < 60; ++i) {
        const int n = 2 + i % 6;
        biclique_cases.push_back(random_bipartite(n / 2, n - n / 2, kProbs[i % 5],
                                                  kSeedBase + 120000 + i));
    }
    biclique_cases.push_back(random_bipartite(3, 3, 1.0, 1));  // K_{3,3}
    biclique_cases.push_back(Graph(3));                        // edgeless
    biclique_cases.push_back(gen_bipartite_extremal(3).graph);
    for (std::size_t i = 0; i < biclique_cases.size(); ++i) {
        const Graph& g = biclique_cases[i];
        auto bp = is_bipartite(g);
        c.expect(bp.has_value(), "biclique case " + std::to_string(i) + " bipartite");
        c.expect(biclique_cover_number(g, *bp, budget).value == oracle::min_biclique_cover(g, *bp),
                 "biclique oracle case " + std::to_string(i));
    }
}

void criterion_roundtrip(std::uint64_t budget, Check& c) {
    auto check_cert = [&](const Graph& g, const BColoringCertificate& cert, const std::string& tag) {
        ojson j1 = certificate_to_json(cert);
        BColoringCertificate parsed = certificate_from_json(j1);
        c.expect(validate_certificate(g, parsed), tag + " revalidates");
        c.expect(certificate_to_json(parsed).dump() == j1.dump(), tag + " bytes stable");
    };
    auto check_decomp = [&](const Graph& g, const ABDecomposition& d, const std::string& tag) {
        ojson j1 = decomposition_to_json(d);
        ABDecomposition parsed = decomposition_from_json(j1, g.order());
        c.expect(verify_ab_decomposition(g, parsed), tag + " revalidates");
        c.expect(decomposition_to_json(parsed).dump() == j1.dump(), tag + " bytes stable");
    };

    for (auto [t, k] : {std::pair{3, 2}, {4, 2}}) {
        auto inst = gen_k1t_extremal(t, k);
        check_cert(inst.graph, inst.certificate, "chain cert");
    }
    auto cp = gen_clique_partition_extremal(2, 3);
    check_cert(cp.graph, cp.certificate, "layered cert");
    for (int p : {3, 4, 5}) {
        auto inst = gen_bipartite_extremal(p);
        check_cert(inst.graph, inst.certificate, "pendant cert");
    }
    for (int i = 0; i < 10; ++i) {
        Graph g = random_graph(2 + i % 6, kProbs[i % 5], kSeedBase + 140000 + i);
        check_cert(g, b_chromatic_number(g, budget).witness, "random cert " + std::to_string(i));
    }

    auto d = is_in_ab(cp.graph, 4, budget);
    c.expect(d.has_value(), "layered(2,3) in A_4");
    if (d) check_decomp(cp.graph, *d, "layered decomposition");
    for (int i = 0; i < 10; ++i) {
        const int n = 3 + i % 8;
        Graph g = random_cobipartite(n / 2, n - n / 2, kProbs[i % 5], kSeedBase + 160000 + i);
        check_decomp(g, phi_via_ab(g, budget).witness, "random decomposition " + std::to_string(i));
    }

    // byte determinism: the same seeded pipeline twice
    {
        Graph g1 = random_graph(7, 0.5, kSeedBase + 180000);
        Graph g2 = random_graph(7, 0.5, kSeedBase + 180000);
        c.expect(certificate_to_json(b_chromatic_number(g1, budget).witness).dump() ==
                     certificate_to_json(b_chromatic_number(g2, budget).witness).dump(),
                 "certificate pipeline deterministic");
        FuzzConfig cfg;
        cfg.family = "general";
        cfg.n_min = 4;
        cfg.n_max = 6;
        cfg.samples = 5;
        cfg.seed = 42;
        cfg.budget = budget;
        c.expect(run_fuzz(cfg).report.dump() == run_fuzz(cfg).report.dump(),
                 "fuzz report deterministic");
    }
}

struct CriterionDef {
    int index;
    const char* name;
    std::function<void(std::uint64_t, Check&)> body;
    double time_limit_seconds;  // 0 = no limit
};

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(std::uint64_t budget, std::ostream* log) {
    const CriterionDef defs[] = {
        {1, "sandwich chi <= phi <= m <= Delta+1 (1024 labeled n=5 + 300 random)", criterion_sandwich, 300.0},
        {2, "star-free bound phi <= (t-1)(chi-1)+1 and extremal chains", criterion_star_free, 0.0},
        {3, "clique partition bound phi <= k^2*omega/(2k-1) and extremal layers", criterion_clique_partition, 0.0},
        {4, "co-bipartite family characterization (iff) and phi <= 4*omega/3", criterion_cobipartite, 600.0},
        {5, "bipartite biclique bound phi <= (n-t+4)/2 and extremal instances", criterion_bipartite, 0.0},
        {6, "solver agreement with brute-force oracles", criterion_oracles, 0.0},
        {7, "certificate JSON round-trip and byte determinism", criterion_roundtrip, 0.0},
    };

    std::vector<CriterionResult> results;
    for (const auto& def : defs) {
        CriterionResult r;
        r.index = def.index;
        r.name = def.name;
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            def.body(budget, check);
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            const bool in_time = def.time_limit_seconds == 0.0 || elapsed <= def.time_limit_seconds;
            r.passed = check.failures == 0 && in_time;
            std::ostringstream detail;
            detail << check.checked << " checks, " << check.failures << " failures, "
                   << static_cast<int>(elapsed * 1000) << " ms";
            if (!in_time) detail << " (over the " << def.time_limit_seconds << " s limit)";
            detail << check.notes.str();
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        if (log)
            *log << "criterion " << r.index << (r.passed ? " PASS " : " FAIL ") << r.name << " ["
                 << r.detail << "]\n";
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace bchrom
