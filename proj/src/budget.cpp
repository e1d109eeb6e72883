#include "bchrom/budget.hpp"

#include <cstdlib>

namespace bchrom {

std::uint64_t default_budget() {
    static const std::uint64_t value = [] {
        if (const char* env = std::getenv("BCHROM_BUDGET")) {
            char* end = nullptr;
            unsigned long long parsed = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && parsed > 0) return static_cast<std::uint64_t>(parsed);
        }
        return std::uint64_t{50'000'000};
    }();
    return value;
}

}  // namespace bchrom
