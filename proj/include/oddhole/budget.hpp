#pragma once

#include <cstdint>

namespace oddhole {

// Node budget for the exponential searches. Every detector that can blow up
// takes one of these; exhaustion is always surfaced to the caller (as an
// Unknown verdict or an `exhausted` flag on the result), never swallowed.
struct SearchBudget {
    std::uint64_t limit = 5'000'000;
    std::uint64_t used = 0;
    bool exhausted = false;

    SearchBudget() = default;
    explicit SearchBudget(std::uint64_t max_nodes) : limit(max_nodes) {}

    // Charge `cost` expansion nodes. Returns false once the budget is gone.
    bool tick(std::uint64_t cost = 1) {
        used += cost;
        if (used > limit) exhausted = true;
        return !exhausted;
    }

    bool ok() const { return !exhausted; }
};

// Immutable snapshot of a budget, carried inside verdicts and reports.
struct BudgetReport {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;
    bool exhausted = false;
};

inline BudgetReport snapshot(const SearchBudget& b) {
    return BudgetReport{b.limit, b.used, b.exhausted};
}

}  // namespace oddhole
