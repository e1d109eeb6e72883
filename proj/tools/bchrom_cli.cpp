#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "bchrom/ab_family.hpp"
#include "bchrom/bounds.hpp"
#include "bchrom/generators.hpp"
#include "bchrom/harness.hpp"
#include "bchrom/json_io.hpp"
#include "bchrom/selftest.hpp"
#include "bchrom/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // theorem violation, validation failure, budget exhausted
constexpr int kExitUsage = 2;    // bad arguments or unparsable input

bchrom::Graph load_graph(const std::string& path) {
    if (path == "-") return bchrom::parse_dimacs(std::cin);
    std::ifstream in(path);
    if (!in) throw bchrom::parse_error("cannot open '" + path + "'");
    return bchrom::parse_dimacs(in);
}

void write_json_file(const std::string& path, const bchrom::ojson& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

void print_vector(std::ostream& os, const char* label, const std::vector<int>& xs) {
    os << label;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    os << "\n";
}

std::uint64_t effective_budget(std::uint64_t flag) {
    return flag != 0 ? flag : bchrom::default_budget();
}

int cmd_phi(const std::string& file, const std::string& json_path, std::uint64_t budget_flag) {
    bchrom::Graph g = load_graph(file);
    auto result = bchrom::b_chromatic_number(g, effective_budget(budget_flag));
    std::cout << "phi = " << result.value << "\n";
    print_vector(std::cout, "colors: ", result.witness.coloring.assignment());
    print_vector(std::cout, "representatives: ", result.witness.representatives);
    if (!json_path.empty()) {
        bchrom::ojson results = bchrom::ojson::array();
        results.push_back({{"op", "phi"}, {"value", result.value}});
        bchrom::ojson certs;
        certs["b_coloring"] = bchrom::certificate_to_json(result.witness);
        write_json_file(json_path, bchrom::make_report(bchrom::graph_to_json(g), results, certs, 0,
                                                       effective_budget(budget_flag)));
    }
    return kExitOk;
}

int cmd_bounds(const std::string& file, bool exact, const std::string& json_path,
               std::uint64_t budget_flag) {
    bchrom::Graph g = load_graph(file);
    auto report = bchrom::bounds_report(g, exact, effective_budget(budget_flag));
    for (const auto& rec : report.bounds) {
        std::cout << rec.name << ": ";
        if (rec.applicable)
            std::cout << *rec.value;
        else
            std::cout << "n/a";
        std::cout << "  (" << rec.hypothesis << ")\n";
    }
    if (report.exact_phi) std::cout << "exact phi = " << *report.exact_phi << "\n";
    for (const auto& name : report.violations)
        std::cout << "VIOLATION: bound " << name << " is below phi\n";
    if (!json_path.empty()) {
        bchrom::ojson results = bchrom::ojson::array();
        results.push_back(bchrom::bounds_report_to_json(report));
        write_json_file(json_path,
                        bchrom::make_report(bchrom::graph_to_json(g), results,
                                            bchrom::ojson::object(), 0, effective_budget(budget_flag)));
    }
    return report.violations.empty() ? kExitOk : kExitFailure;
}

int cmd_certify_ab(const std::string& file, int b, bool want_max, const std::string& json_path,
                   std::uint64_t budget_flag) {
    bchrom::Graph g = load_graph(file);
    const std::uint64_t budget = effective_budget(budget_flag);

    std::optional<bchrom::ABDecomposition> decomposition;
    if (want_max) {
        auto result = bchrom::phi_via_ab(g, budget);
        std::cout << "max b with G in A_b: " << result.value << "\n";
        decomposition = std::move(result.witness);
    } else {
        decomposition = bchrom::is_in_ab(g, b, budget);
        std::cout << (decomposition ? "G is in A_" : "G is not in A_") << b << "\n";
    }
    if (decomposition) {
        std::cout << bchrom::decomposition_to_json(*decomposition).dump(2) << "\n";
        if (!bchrom::verify_ab_decomposition(g, *decomposition)) return kExitFailure;
    }
    if (!json_path.empty()) {
        bchrom::ojson results = bchrom::ojson::array();
        results.push_back({{"op", want_max ? "certify-ab-max" : "certify-ab"},
                           {"b", want_max ? (decomposition ? decomposition->b : 0) : b},
                           {"member", decomposition.has_value()}});
        bchrom::ojson certs = bchrom::ojson::object();
        if (decomposition) certs["ab_decomposition"] = bchrom::decomposition_to_json(*decomposition);
        write_json_file(json_path, bchrom::make_report(bchrom::graph_to_json(g), results, certs, 0, budget));
    }
    return kExitOk;
}

int cmd_generate(const std::string& family, const std::vector<int>& params,
                 const std::string& out_path) {
    bchrom::GeneratedInstance inst;
    std::string label;
    bchrom::ojson claims;
    if (family == "k1t") {
        if (params.size() != 2) throw CLI::ValidationError("generate k1t needs <t> <k>");
        inst = bchrom::gen_k1t_extremal(params[0], params[1]);
        label = "k1t t=" + std::to_string(params[0]) + " k=" + std::to_string(params[1]);
        claims = {{"chi", params[1]}, {"star_free_for_t", params[0]}};
    } else if (family == "cliquepart") {
        if (params.size() != 2) throw CLI::ValidationError("generate cliquepart needs <k> <omega>");
        inst = bchrom::gen_clique_partition_extremal(params[0], params[1]);
        label = "cliquepart k=" + std::to_string(params[0]) + " omega=" + std::to_string(params[1]);
        claims = {{"clique_number", params[1]}, {"clique_partition_number", params[0]}};
    } else if (family == "bipartite") {
        if (params.size() != 1) throw CLI::ValidationError("generate bipartite needs <p>");
        inst = bchrom::gen_bipartite_extremal(params[0]);
        label = "bipartite p=" + std::to_string(params[0]);
        claims = {{"biclique_number", params[0] - 1}, {"max_degree", params[0] - 1}};
    } else {
        throw CLI::ValidationError("unknown family '" + family + "'");
    }

    const std::string comment = "extremal " + label + ", phi=" + std::to_string(inst.claimed_phi);
    if (out_path.empty() || out_path == "-") {
        bchrom::write_dimacs(std::cout, inst.graph, comment);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        bchrom::write_dimacs(out, inst.graph, comment);
        bchrom::ojson results = bchrom::ojson::array();
        results.push_back({{"op", "generate"},
                           {"family", family},
                           {"params", params},
                           {"claimed_phi", inst.claimed_phi},
                           {"claimed_invariants", claims}});
        bchrom::ojson certs;
        certs["b_coloring"] = bchrom::certificate_to_json(inst.certificate);
        write_json_file(out_path + ".json",
                        bchrom::make_report(bchrom::graph_to_json(inst.graph), results, certs, 0,
                                            bchrom::default_budget()));
    }
    return kExitOk;
}

int cmd_fuzz(const std::string& config_path, const std::string& json_path) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open '" + config_path + "'");
    bchrom::ojson cfg_json = bchrom::ojson::parse(in);
    bchrom::FuzzConfig cfg = bchrom::fuzz_config_from_json(cfg_json);
    auto outcome = bchrom::run_fuzz(cfg, &std::cout);
    if (!json_path.empty()) write_json_file(json_path, outcome.report);
    return outcome.violation_samples.empty() ? kExitOk : kExitFailure;
}

int cmd_selftest(std::uint64_t budget_flag) {
    auto results = bchrom::run_acceptance_suite(effective_budget(budget_flag), &std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    std::cout << (all ? "selftest: all criteria passed\n" : "selftest: FAILURES\n");
    return all ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bchrom: exact b-chromatic numbers, theorem bounds, and certificates"};
    app.set_version_flag("--version", bchrom::kVersion);
    app.require_subcommand(1);

    std::string file = "-", json_path, out_path, config_path, family;
    std::vector<int> params;
    std::uint64_t budget = 0;
    int b_value = 0;
    bool exact = false, want_max = false;

    auto* phi = app.add_subcommand("phi", "exact b-chromatic number with certificate");
    phi->add_option("file", file, "DIMACS .col file, or - for stdin");
    phi->add_option("--json", json_path, "write a JSON report");
    phi->add_option("--budget", budget, "node budget per search");

    auto* bounds = app.add_subcommand("bounds", "evaluate every applicable upper bound");
    bounds->add_option("file", file, "DIMACS .col file, or - for stdin");
    bounds->add_flag("--exact", exact, "also compute exact phi and check for violations");
    bounds->add_option("--json", json_path, "write a JSON report");
    bounds->add_option("--budget", budget, "node budget per search");

    auto* certify = app.add_subcommand("certify-ab", "A_b membership for co-bipartite graphs");
    certify->add_option("file", file, "DIMACS .col file, or - for stdin");
    auto* b_opt = certify->add_option("--b", b_value, "test membership in A_b");
    auto* max_flag = certify->add_flag("--max", want_max, "largest b with G in A_b");
    certify->add_option("--json", json_path, "write a JSON report");
    certify->add_option("--budget", budget, "node budget per search");
    b_opt->excludes(max_flag);

    auto* generate = app.add_subcommand("generate", "emit an extremal instance as DIMACS");
    generate->add_option("family", family, "k1t | cliquepart | bipartite")->required();
    generate->add_option("params", params, "family parameters");
    generate->add_option("-o,--output", out_path, "output file (certificate sidecar goes to <file>.json)");

    auto* fuzz = app.add_subcommand("fuzz", "run a seeded theorem-checking campaign");
    fuzz->add_option("--config", config_path, "JSON fuzz configuration")->required();
    fuzz->add_option("--json", json_path, "write the campaign report");

    auto* selftest = app.add_subcommand("selftest", "run the full acceptance campaign");
    selftest->add_option("--budget", budget, "node budget per search");

    try {
        app.parse(argc, argv);
        if (phi->parsed()) return cmd_phi(file, json_path, budget);
        if (bounds->parsed()) return cmd_bounds(file, exact, json_path, budget);
        if (certify->parsed()) {
            if (!want_max && b_opt->count() == 0)
                throw CLI::ValidationError("certify-ab needs --b <k> or --max");
            return cmd_certify_ab(file, b_value, want_max, json_path, budget);
        }
        if (generate->parsed()) return cmd_generate(family, params, out_path);
        if (fuzz->parsed()) return cmd_fuzz(config_path, json_path);
        if (selftest->parsed()) return cmd_selftest(budget);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const bchrom::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bchrom::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
