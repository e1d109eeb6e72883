#pragma once

#include <iosfwd>

#include "bchrom/bounds.hpp"
#include "bchrom/json_io.hpp"
#include "bchrom/random_graphs.hpp"

namespace bchrom {

/// Deterministic fuzz campaign configuration: the seed fully determines the
/// sample stream. Per-family desk-scale caps on n are enforced (general and
/// cobipartite 12, k1t-free 12, bipartite 14, tree 16).
struct FuzzConfig {
    std::string family = "general";  // general | bipartite | cobipartite | k1t-free | tree
    int n_min = 4;
    int n_max = 9;
    double edge_probability = 0.5;
    int samples = 100;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;  // 0 = default_budget()
    int t = 3;                 // star size for the k1t-free family filter
};

FuzzConfig fuzz_config_from_json(const ojson& j);
ojson fuzz_config_to_json(const FuzzConfig& cfg);

struct FuzzOutcome {
    int samples = 0;
    int passed = 0;
    int skipped = 0;                     // budget exhausted, recorded distinctly
    std::vector<int> violation_samples;  // fatal findings
    ojson report;
};

/// Runs check_theorems over the sample stream. Violations are printed with
/// the offending graph; budget-exhausted samples are recorded as skipped,
/// never as passes.
FuzzOutcome run_fuzz(const FuzzConfig& cfg, std::ostream* log = nullptr);

}  // namespace bchrom
