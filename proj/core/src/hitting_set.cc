#include "hitting_set.hh"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace idcodes::detail
{
    namespace
    {
        class Solver
        {
            public:
                Solver(const HittingSetProblem & p, int max_size, std::uint64_t limit) :
                    _problem(p),
                    _max_size(max_size),
                    _limit(limit),
                    _hit_count(p.sets.size(), 0),
                    _excluded(static_cast<std::size_t>(p.universe), 0),
                    _incidence(static_cast<std::size_t>(p.universe)),
                    _degree(static_cast<std::size_t>(p.universe), 0),
                    _mark(static_cast<std::size_t>(p.universe), 0)
                {
                    for (std::size_t s = 0 ; s < p.sets.size() ; ++s)
                        for (int c : p.sets[s]) {
                            if (c < 0 || c >= p.universe)
                                throw std::invalid_argument("hitting set element out of range");
                            _incidence[static_cast<std::size_t>(c)].push_back(s);
                        }
                }

                auto choose(int c) -> void
                {
                    _chosen.push_back(c);
                    for (auto s : _incidence[static_cast<std::size_t>(c)])
                        if (_hit_count[s]++ == 0)
                            ++_sets_hit;
                }

                auto unchoose() -> void
                {
                    int c = _chosen.back();
                    _chosen.pop_back();
                    for (auto s : _incidence[static_cast<std::size_t>(c)])
                        if (--_hit_count[s] == 0)
                            --_sets_hit;
                }

                auto search() -> HittingSetStatus
                {
                    if (_nodes >= _limit)
                        return HittingSetStatus::BudgetExhausted;
                    ++_nodes;

                    if (_sets_hit == _problem.sets.size())
                        return HittingSetStatus::Found;
                    auto remaining = _max_size - static_cast<int>(_chosen.size());
                    if (remaining <= 0)
                        return HittingSetStatus::Infeasible;

                    // branching set: unhit with fewest available elements
                    std::size_t best = _problem.sets.size();
                    int best_avail = 0;
                    for (std::size_t s = 0 ; s < _problem.sets.size() ; ++s) {
                        if (_hit_count[s])
                            continue;
                        int avail = 0;
                        for (int c : _problem.sets[s])
                            avail += ! _excluded[static_cast<std::size_t>(c)];
                        if (avail == 0)
                            return HittingSetStatus::Infeasible;
                        if (best == _problem.sets.size() || avail < best_avail) {
                            best = s;
                            best_avail = avail;
                        }
                    }

                    if (lower_bound() > remaining)
                        return HittingSetStatus::Infeasible;

                    std::vector<int> branch;
                    for (int c : _problem.sets[best])
                        if (! _excluded[static_cast<std::size_t>(c)])
                            branch.push_back(c);

                    auto result = HittingSetStatus::Infeasible;
                    std::size_t excluded_here = 0;
                    for (int c : branch) {
                        choose(c);
                        auto sub = search();
                        if (sub == HittingSetStatus::Found)
                            return sub;     // leave the solution in _chosen
                        unchoose();
                        if (sub == HittingSetStatus::BudgetExhausted) {
                            result = sub;
                            break;
                        }
                        _excluded[static_cast<std::size_t>(c)] = 1;
                        ++excluded_here;
                    }
                    for (std::size_t j = 0 ; j < excluded_here ; ++j)
                        _excluded[static_cast<std::size_t>(branch[j])] = 0;
                    return result;
                }

                auto chosen() const -> const std::vector<int> & { return _chosen; }
                auto nodes() const -> std::uint64_t { return _nodes; }

            private:
                // max(disjoint packing of unhit sets, ceil(sum over unhit sets of 1 / max degree))
                auto lower_bound() -> int
                {
                    std::fill(_degree.begin(), _degree.end(), 0);
                    for (std::size_t s = 0 ; s < _problem.sets.size() ; ++s)
                        if (! _hit_count[s])
                            for (int c : _problem.sets[s])
                                ++_degree[static_cast<std::size_t>(c)];

                    double fractional = 0.0;
                    int packing = 0;
                    ++_stamp;
                    for (std::size_t s = 0 ; s < _problem.sets.size() ; ++s) {
                        if (_hit_count[s])
                            continue;
                        int max_degree = 0;
                        bool disjoint = true;
                        for (int c : _problem.sets[s]) {
                            auto cc = static_cast<std::size_t>(c);
                            if (_excluded[cc])
                                continue;
                            max_degree = std::max(max_degree, _degree[cc]);
                            if (_mark[cc] == _stamp)
                                disjoint = false;
                        }
                        fractional += 1.0 / max_degree;
                        if (disjoint) {
                            ++packing;
                            for (int c : _problem.sets[s])
                                _mark[static_cast<std::size_t>(c)] = _stamp;
                        }
                    }
                    return std::max(packing, static_cast<int>(std::ceil(fractional - 1e-9)));
                }

                const HittingSetProblem & _problem;
                int _max_size;
                std::uint64_t _limit;
                std::uint64_t _nodes = 0;

                std::vector<int> _hit_count;
                std::size_t _sets_hit = 0;
                std::vector<char> _excluded;
                std::vector<int> _chosen;
                std::vector<std::vector<std::size_t>> _incidence;
                std::vector<int> _degree;
                std::vector<std::uint64_t> _mark;
                std::uint64_t _stamp = 0;
        };
    }

    auto solve_hitting_set(const HittingSetProblem & problem, int max_size, const std::vector<int> & forced,
            std::uint64_t node_limit) -> HittingSetOutcome
    {
        HittingSetOutcome outcome;
        if (static_cast<int>(forced.size()) > max_size)
            return outcome;
        for (const auto & s : problem.sets)
            if (s.empty())
                return outcome;

        Solver solver(problem, max_size, node_limit);
        for (int c : forced)
            solver.choose(c);
        outcome.status = solver.search();
        outcome.nodes = solver.nodes();
        if (outcome.status == HittingSetStatus::Found) {
            outcome.chosen = solver.chosen();
            std::sort(outcome.chosen.begin(), outcome.chosen.end());
        }
        return outcome;
    }

    auto remove_dominated_sets(HittingSetProblem & problem) -> void
    {
        for (auto & s : problem.sets) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        std::sort(problem.sets.begin(), problem.sets.end(), [] (const auto & a, const auto & b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        problem.sets.erase(std::unique(problem.sets.begin(), problem.sets.end()), problem.sets.end());

        std::vector<std::vector<int>> kept;
        for (const auto & s : problem.sets) {
            bool dominated = std::any_of(kept.begin(), kept.end(), [&] (const auto & k) {
                return std::includes(s.begin(), s.end(), k.begin(), k.end());
            });
            if (! dominated)
                kept.push_back(s);
        }
        problem.sets = std::move(kept);
    }
}
