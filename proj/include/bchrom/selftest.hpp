#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bchrom/budget.hpp"

namespace bchrom {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full acceptance campaign: the sandwich suite, one suite per
/// upper-bound theorem with its extremal instances, oracle equivalence, and
/// certificate round-trips. Prints one pass/fail line per criterion to log.
std::vector<CriterionResult> run_acceptance_suite(std::uint64_t budget = default_budget(),
                                                  std::ostream* log = nullptr);

}  // namespace bchrom
