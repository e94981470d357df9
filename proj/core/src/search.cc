#include "hitting_set.hh"

#include <idcodes/checked.hh>
#include <idcodes/constructions.hh>
#include <idcodes/search.hh>
#include <idcodes/verifier.hh>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idcodes
{
    namespace
    {
        using detail::HittingSetProblem;
        using detail::HittingSetStatus;

        auto floor_mod(Coord a, Coord m) -> Coord
        {
            auto r = a % m;
            return r < 0 ? r + m : r;
        }

        // Identifiability of a (p, q)-periodic king code is a hitting-set condition on
        // box cells: every ball must contain a codeword, and for every pair u, v at
        // distance <= 2 some lattice point of B(u) Δ B(v) must be a codeword.
        auto king_constraints(Coord p, Coord q) -> HittingSetProblem
        {
            auto cell = [&] (const Point & x) { return static_cast<int>(floor_mod(x[0], p) * q + floor_mod(x[1], q)); };

            HittingSetProblem problem;
            problem.universe = static_cast<int>(p * q);
            const auto box = box_points(std::vector<Coord>{p, q});
            auto pair_offsets = ball_offsets(2, 2, Metric::King);
            std::erase(pair_offsets, Point::origin(2));

            for (const auto & u : box) {
                auto bu = ball(u, 1, Metric::King);
                std::vector<int> cover;
                for (const auto & x : bu)
                    cover.push_back(cell(x));
                problem.sets.push_back(std::move(cover));

                for (const auto & d : pair_offsets) {
                    auto bv = ball(u + d, 1, Metric::King);
                    std::vector<Point> diff;
                    std::set_symmetric_difference(bu.begin(), bu.end(), bv.begin(), bv.end(), std::back_inserter(diff));
                    std::vector<int> separate;
                    for (const auto & x : diff)
                        separate.push_back(cell(x));
                    problem.sets.push_back(std::move(separate));
                }
            }
            detail::remove_dominated_sets(problem);
            return problem;
        }

        auto hypercube_problem(int n) -> HittingSetProblem
        {
            HittingSetProblem problem;
            problem.universe = 1 << n;
            for (int x = 0 ; x < problem.universe ; ++x) {
                std::vector<int> closed{x};
                for (int i = 0 ; i < n ; ++i)
                    closed.push_back(x ^ (1 << i));
                problem.sets.push_back(std::move(closed));
            }
            return problem;
        }

        // Greedy by uncovered count, then drop redundant words and try 2-for-1 swaps
        // until nothing improves.
        auto greedy_dominating_set(int n) -> std::vector<BinaryWord>
        {
            const BinaryWord size = BinaryWord{1} << n;
            std::vector<int> cover_count(size, 0);
            std::vector<char> in_set(size, 0);
            std::size_t uncovered = size;

            auto add = [&] (BinaryWord w, int delta) {
                auto touch = [&] (BinaryWord x) {
                    if (delta > 0 && cover_count[x]++ == 0)
                        --uncovered;
                    if (delta < 0 && --cover_count[x] == 0)
                        ++uncovered;
                };
                touch(w);
                for (int i = 0 ; i < n ; ++i)
                    touch(w ^ (BinaryWord{1} << i));
                in_set[w] = delta > 0;
            };
            auto gain = [&] (BinaryWord w) {
                int g = cover_count[w] == 0;
                for (int i = 0 ; i < n ; ++i)
                    g += cover_count[w ^ (BinaryWord{1} << i)] == 0;
                return g;
            };

            while (uncovered > 0) {
                BinaryWord best = 0;
                int best_gain = -1;
                for (BinaryWord w = 0 ; w < size ; ++w)
                    if (! in_set[w] && gain(w) > best_gain) {
                        best = w;
                        best_gain = gain(w);
                    }
                add(best, +1);
            }

            auto redundant = [&] (BinaryWord w) {
                if (cover_count[w] < 2)
                    return false;
                for (int i = 0 ; i < n ; ++i)
                    if (cover_count[w ^ (BinaryWord{1} << i)] < 2)
                        return false;
                return true;
            };

            for (bool improved = true ; improved ; ) {
                improved = false;
                for (BinaryWord w = 0 ; w < size ; ++w)
                    if (in_set[w] && redundant(w)) {
                        add(w, -1);
                        improved = true;
                    }
                // remove two words, then refill greedily; keep only if strictly smaller
                std::vector<BinaryWord> current;
                for (BinaryWord w = 0 ; w < size && ! improved ; ++w)
                    if (in_set[w])
                        current.push_back(w);
                for (std::size_t a = 0 ; a < current.size() && ! improved ; ++a)
                    for (std::size_t b = a + 1 ; b < current.size() && ! improved ; ++b) {
                        add(current[a], -1);
                        add(current[b], -1);
                        std::vector<BinaryWord> added;
                        while (uncovered > 0 && added.size() < 2) {
                            BinaryWord best = 0;
                            int best_gain = -1;
                            for (BinaryWord w = 0 ; w < size ; ++w)
                                if (! in_set[w] && w != current[a] && w != current[b] && gain(w) > best_gain) {
                                    best = w;
                                    best_gain = gain(w);
                                }
                            add(best, +1);
                            added.push_back(best);
                        }
                        if (uncovered == 0 && added.size() < 2)
                            improved = true;
                        else {
                            for (auto w : added)
                                add(w, -1);
                            add(current[a], +1);
                            add(current[b], +1);
                        }
                    }
            }

            std::vector<BinaryWord> result;
            for (BinaryWord w = 0 ; w < size ; ++w)
                if (in_set[w])
                    result.push_back(w);
            return result;
        }
    }

    auto status_name(SearchStatus s) -> std::string
    {
        switch (s) {
            case SearchStatus::Found: return "found";
            case SearchStatus::ProvenAbsent: return "proven absent";
            case SearchStatus::BudgetExhausted: return "budget exhausted";
        }
        return "?";
    }

    auto search_periodic_king_code(std::int64_t target_words, std::pair<Coord, Coord> periods,
            const SearchBudget & budget) -> KingSearchResult
    {
        auto [p, q] = periods;
        if (p < 1 || q < 1)
            throw std::invalid_argument("periods must be positive");
        if (target_words < 1 || checked_mul(p, q) < target_words)
            throw std::invalid_argument("target word count must be in 1..p*q");
        if (p * q > 4096)
            throw std::invalid_argument("king search box too large");

        KingSearchResult result;
        result.periods = periods;

        auto problem = king_constraints(p, q);
        auto outcome = detail::solve_hitting_set(problem, static_cast<int>(target_words), {0}, budget.max_nodes);
        result.nodes = outcome.nodes;

        switch (outcome.status) {
            case HittingSetStatus::Infeasible:
                result.status = SearchStatus::ProvenAbsent;
                return result;
            case HittingSetStatus::BudgetExhausted:
                result.status = SearchStatus::BudgetExhausted;
                return result;
            case HittingSetStatus::Found:
                break;
        }

        // supersets of identifying codes are identifying, so pad up to the target size
        std::set<int> cells(outcome.chosen.begin(), outcome.chosen.end());
        for (int c = 0 ; static_cast<std::int64_t>(cells.size()) < target_words ; ++c)
            cells.insert(c);

        std::vector<Point> words;
        for (int c : cells)
            words.push_back(Point{c / q, c % q});
        PeriodicCode code(Metric::King, {p, q}, std::move(words));

        if (verify_identifying(code, 1).verdict != Verdict::Identifying)
            throw std::logic_error("king search produced a code that fails verification");

        result.status = SearchStatus::Found;
        result.code = std::move(code);
        return result;
    }

    auto search_king_schedule(const Rational & target_density, const SearchBudget & budget) -> KingSearchResult
    {
        if (budget.period_schedule.empty())
            throw std::invalid_argument("period schedule is empty");
        if (target_density <= Rational(0) || target_density > Rational(1))
            throw std::invalid_argument("target density must be in (0, 1]");

        KingSearchResult last;
        bool budget_hit = false;
        std::uint64_t nodes = 0;
        for (auto periods : budget.period_schedule) {
            auto words = target_density * Rational(checked_mul(periods.first, periods.second));
            if (words.denominator() != 1)
                continue;
            last = search_periodic_king_code(words.numerator(), periods, budget);
            nodes += last.nodes;
            if (last.status == SearchStatus::Found)
                break;
            budget_hit = budget_hit || last.status == SearchStatus::BudgetExhausted;
        }
        last.nodes = nodes;
        if (last.status != SearchStatus::Found)
            last.status = budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::ProvenAbsent;
        return last;
    }

    auto search_min_dominating_set(int n, const SearchBudget & budget) -> DominatingSetSearchResult
    {
        if (n < 1 || n > 16)
            throw std::invalid_argument("dominating-set search supports 1 <= n <= 16");

        DominatingSetSearchResult result;
        result.words = greedy_dominating_set(n);
        if (n > 6)
            return result;

        const auto problem = hypercube_problem(n);
        const int volume = 1 << n;
        bool proven = true;
        for (int k = (volume + n) / (n + 1) ; k < static_cast<int>(result.words.size()) ; ++k) {
            auto outcome = detail::solve_hitting_set(problem, k, {0}, budget.max_nodes);
            result.nodes += outcome.nodes;
            if (outcome.status == HittingSetStatus::BudgetExhausted)
                proven = false;
            else if (outcome.status == HittingSetStatus::Found) {
                result.words.assign(outcome.chosen.begin(), outcome.chosen.end());
                break;
            }
        }
        result.proven_minimal = proven;
        return result;
    }
}
