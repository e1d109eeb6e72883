#include "bchrom/harness.hpp"

#include <ostream>

namespace bchrom {

namespace {

int family_cap(const std::string& family) {
    if (family == "general" || family == "cobipartite" || family == "k1t-free") return 12;
    if (family == "bipartite") return 14;
    if (family == "tree") return 16;
    throw std::invalid_argument("fuzz: unknown family '" + family + "'");
}

void validate(const FuzzConfig& cfg) {
    const int cap = family_cap(cfg.family);
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("fuzz: bad n range");
    if (cfg.n_max > cap)
        throw std::invalid_argument("fuzz: n_max exceeds the desk-scale cap " +
                                    std::to_string(cap) + " for family " + cfg.family);
    if (cfg.edge_probability < 0.0 || cfg.edge_probability > 1.0)
        throw std::invalid_argument("fuzz: edge probability outside [0,1]");
    if (cfg.samples < 1) throw std::invalid_argument("fuzz: samples must be >= 1");
    if (cfg.family == "k1t-free" && cfg.t < 3)
        throw std::invalid_argument("fuzz: t must be >= 3");
}

Graph make_sample(const FuzzConfig& cfg, int index, std::uint64_t& used_seed) {
    const int span = cfg.n_max - cfg.n_min + 1;
    const int n = cfg.n_min + index % span;
    used_seed = cfg.seed + static_cast<std::uint64_t>(index) * 100000;
    if (cfg.family == "general") return random_graph(n, cfg.edge_probability, used_seed);
    if (cfg.family == "bipartite")
        return random_bipartite(n / 2, n - n / 2, cfg.edge_probability, used_seed);
    if (cfg.family == "cobipartite")
        return random_cobipartite(n / 2, n - n / 2, cfg.edge_probability, used_seed);
    if (cfg.family == "tree") return random_tree(n, used_seed);
    // k1t-free: rejection sampling over per-attempt seeds
    for (std::uint64_t attempt = 0; attempt < 100000; ++attempt) {
        Graph g = random_graph(n, cfg.edge_probability, used_seed + attempt);
        if (is_k1t_free(g, cfg.t)) {
            used_seed += attempt;
            return g;
        }
    }
    throw std::runtime_error("fuzz: could not sample a star-free graph; lower n or raise p");
}

}  // namespace

FuzzConfig fuzz_config_from_json(const ojson& j) {
    FuzzConfig cfg;
    if (j.contains("family")) cfg.family = j.at("family").get<std::string>();
    if (j.contains("n_min")) cfg.n_min = j.at("n_min").get<int>();
    if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
    if (j.contains("edge_probability")) cfg.edge_probability = j.at("edge_probability").get<double>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("budget")) cfg.budget = j.at("budget").get<std::uint64_t>();
    if (j.contains("t")) cfg.t = j.at("t").get<int>();
    return cfg;
}

ojson fuzz_config_to_json(const FuzzConfig& cfg) {
    ojson j;
    j["family"] = cfg.family;
    j["n_min"] = cfg.n_min;
    j["n_max"] = cfg.n_max;
    j["edge_probability"] = cfg.edge_probability;
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    j["budget"] = cfg.budget;
    j["t"] = cfg.t;
    return j;
}

FuzzOutcome run_fuzz(const FuzzConfig& cfg, std::ostream* log) {
    validate(cfg);
    const std::uint64_t budget = cfg.budget != 0 ? cfg.budget : default_budget();

    FuzzOutcome outcome;
    outcome.samples = cfg.samples;
    ojson results = ojson::array();

    for (int i = 0; i < cfg.samples; ++i) {
        std::uint64_t used_seed = 0;
        Graph g = make_sample(cfg, i, used_seed);
        ojson entry;
        entry["index"] = i;
        entry["seed"] = used_seed;
        entry["graph"] = graph_to_json(g);
        try {
            BoundsReport report = check_theorems(g, budget);
            entry["bounds"] = bounds_report_to_json(report);
            if (report.violations.empty()) {
                entry["status"] = "pass";
                ++outcome.passed;
            } else {
                entry["status"] = "violation";
                outcome.violation_samples.push_back(i);
                if (log) {
                    *log << "VIOLATION in sample " << i << " (seed " << used_seed << "):\n";
                    write_dimacs(*log, g, "violating graph");
                    for (const auto& name : report.violations) *log << "  bound below phi: " << name << "\n";
                }
            }
        } catch (const budget_exceeded& e) {
            entry["status"] = "skipped";
            entry["skip_reason"] = e.what();
            ++outcome.skipped;
            if (log) *log << "sample " << i << " skipped: " << e.what() << "\n";
        }
        results.push_back(std::move(entry));
    }

    ojson certificates = ojson::object();
    outcome.report = make_report(nullptr, results, certificates, cfg.seed, budget);
    outcome.report["meta"]["config"] = fuzz_config_to_json(cfg);
    if (log)
        *log << "fuzz: " << outcome.passed << "/" << outcome.samples << " passed, "
             << outcome.skipped << " skipped, " << outcome.violation_samples.size()
             << " violations\n";
    return outcome;
}

}  // namespace bchrom
