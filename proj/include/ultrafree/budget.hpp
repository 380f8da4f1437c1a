#pragma once

#include "ultrafree/errors.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace ultrafree {

struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_millis;

    static SearchBudget unlimited() { return {}; }
};

/// Counts search nodes against a SearchBudget. tick() throws BudgetExceeded once a limit is passed.
class BudgetTracker {
public:
    BudgetTracker(const SearchBudget& budget, std::string what);

    void tick()
    {
        ++nodes_;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes)
            exceeded("node");
        if (budget_.max_millis && (nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
            exceeded("time");
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    [[noreturn]] void exceeded(const char* kind) const;

    SearchBudget budget_;
    std::string what_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point deadline_;
};

}  // namespace ultrafree
