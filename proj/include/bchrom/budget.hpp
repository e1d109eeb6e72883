#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bchrom {

/// Thrown when an exact search exhausts its node budget. The searches never
/// degrade to an approximate answer; they fail with this instead.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default node budget per solver invocation. Overridable with the
/// BCHROM_BUDGET environment variable.
std::uint64_t default_budget();

/// Node counter shared down one search tree.
class BudgetCounter {
public:
    explicit BudgetCounter(std::uint64_t limit) : limit_(limit) {}

    void tick(const char* where) {
        if (++used_ > limit_)
            throw budget_exceeded(std::string("node budget exceeded in ") + where);
    }

    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

}  // namespace bchrom
