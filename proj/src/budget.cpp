#include "ultrafree/budget.hpp"

namespace ultrafree {

BudgetTracker::BudgetTracker(const SearchBudget& budget, std::string what)
    : budget_(budget), what_(std::move(what))
{
    if (budget_.max_nodes && *budget_.max_nodes == 0)
        throw PreconditionViolated("search budget node limit must be positive");
    if (budget_.max_millis) {
        if (budget_.max_millis->count() <= 0)
            throw PreconditionViolated("search budget time limit must be positive");
        deadline_ = std::chrono::steady_clock::now() + *budget_.max_millis;
    }
}

void BudgetTracker::exceeded(const char* kind) const
{
    throw BudgetExceeded(what_ + ": " + kind + " budget exceeded after " + std::to_string(nodes_) + " nodes");
}

}  // namespace ultrafree
