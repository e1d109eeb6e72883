// Acceptance gate: runs every criterion at full scale and prints one
// pass/fail line each. Exits nonzero if any criterion fails.

#include <iostream>

#include "bchrom/selftest.hpp"

int main() {
    auto results = bchrom::run_acceptance_suite(bchrom::default_budget(), &std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    std::cout << (all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << std::endl;
    return all ? 0 : 1;
}
