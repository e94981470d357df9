#pragma once

#include <idcodes/code_io.hh>
#include <idcodes/periodic_code.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace idcodes
{
    struct SearchBudget
    {
        std::uint64_t max_nodes = 50'000'000;
        std::vector<std::pair<Coord, Coord>> period_schedule;
    };

    enum class SearchStatus
    {
        Found,
        ProvenAbsent,
        BudgetExhausted
    };

    auto status_name(SearchStatus s) -> std::string;

    struct KingSearchResult
    {
        SearchStatus status = SearchStatus::ProvenAbsent;
        std::optional<PeriodicCode> code;
        std::pair<Coord, Coord> periods{0, 0};
        std::uint64_t nodes = 0;
    };

    /// Looks for a 1-identifying king-grid code with periods (p, q) and exactly
    /// target_words words in the box. Exhaustive up to torus translation: one
    /// codeword is pinned to the origin. A returned code has been checked with
    /// verify_identifying. Throws std::invalid_argument if p q < target_words.
    auto search_periodic_king_code(std::int64_t target_words, std::pair<Coord, Coord> periods,
            const SearchBudget & budget) -> KingSearchResult;

    /// Walks budget.period_schedule, skipping boxes where density * p * q is not an
    /// integer, and returns the first code found. Status is ProvenAbsent only if every
    /// entry was exhausted without hitting the budget.
    auto search_king_schedule(const Rational & target_density, const SearchBudget & budget) -> KingSearchResult;

    struct DominatingSetSearchResult
    {
        std::vector<BinaryWord> words;
        bool proven_minimal = false;
        std::uint64_t nodes = 0;
    };

    /// A small dominating set of Q_n. For n <= 6 an exact branch and bound runs for
    /// increasing sizes and the result is proven minimal unless the node budget runs
    /// out, in which case the best heuristic set is returned unproven.
    auto search_min_dominating_set(int n, const SearchBudget & budget) -> DominatingSetSearchResult;
}
