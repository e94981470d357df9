#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace idcodes::detail
{
    /// A family of subsets of {0, .., universe - 1}. A hitting set meets every member.
    struct HittingSetProblem
    {
        int universe = 0;
        std::vector<std::vector<int>> sets;
    };

    enum class HittingSetStatus
    {
        Found,
        Infeasible,
        BudgetExhausted
    };

    struct HittingSetOutcome
    {
        HittingSetStatus status = HittingSetStatus::Infeasible;
        std::vector<int> chosen;
        std::uint64_t nodes = 0;
    };

    /// Depth-first branch and bound for a hitting set of size <= max_size that contains
    /// every element of `forced`. Branches on the unhit set with the fewest available
    /// elements; prunes with a disjoint-packing bound and a fractional degree bound.
    /// Deterministic: the same problem always yields the same answer and node count.
    auto solve_hitting_set(const HittingSetProblem & problem, int max_size, const std::vector<int> & forced,
            std::uint64_t node_limit) -> HittingSetOutcome;

    /// Drops duplicate sets and any set that contains another one.
    auto remove_dominated_sets(HittingSetProblem & problem) -> void;
}
