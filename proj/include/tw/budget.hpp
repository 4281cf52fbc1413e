#pragma once

#include <cstdint>
#include <stdexcept>

namespace tw {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("search node budget exceeded") {}
};

// Caps the number of recursion nodes a search may visit; 0 means no cap.
struct SearchBudget {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;

    void tick() {
        ++used;
        if (limit && used > limit) throw BudgetExceeded();
    }
};

}  // namespace tw
