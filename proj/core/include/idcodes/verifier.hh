#pragma once

#include <idcodes/periodic_code.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace idcodes
{
    struct EmptyBall
    {
        Point vertex;
        auto operator==(const EmptyBall &) const -> bool = default;
    };

    struct Indistinguishable
    {
        Point first;
        Point second;
        auto operator==(const Indistinguishable &) const -> bool = default;
    };

    using Witness = std::variant<EmptyBall, Indistinguishable>;

    enum class Verdict
    {
        Identifying,
        NotIdentifying
    };

    struct VerificationReport
    {
        Verdict verdict = Verdict::Identifying;
        std::optional<Witness> witness;
        std::uint64_t pairs_checked = 0;
        std::uint64_t vertices_checked = 0;

        auto operator==(const VerificationReport &) const -> bool = default;
    };

    /**
     * Decides whether a periodic code is r-identifying on the whole lattice.
     *
     * Every vertex is a translate of a fundamental-box vertex by a period vector,
     * and translating both the vertex and the code by a period leaves identifying
     * sets translated, so only box vertices u need to be examined:
     *
     *  (a) I_r(u) is nonempty for every u in the box;
     *  (b) I_r(u) != I_r(v) for every v != u with d(u, v) <= 2r.
     *
     * Pairs with d(u, v) >= 2r + 1 have disjoint balls, so two nonempty identifying
     * sets for them are automatically different and (a) covers them. The witness is
     * the lexicographically least failure: the least empty box vertex if (a) fails,
     * otherwise the least pair (u, v) ordered by u and then v. Work is split across
     * `threads` workers over contiguous ranges of the box; the report does not
     * depend on the thread count.
     */
    auto verify_identifying(const PeriodicCode & code, Coord r, unsigned threads = 1) -> VerificationReport;

    /// Independent oracle: every pair of the finite torus prod Z_{p_i} with toroidal
    /// distance. Requires p_i >= 4r + 3 (throws std::invalid_argument otherwise), which
    /// makes radius-2r neighbourhoods of the torus isometric to those of the lattice.
    /// Indistinguishable witnesses are reported as lattice points, the second one
    /// being the representative nearest the first.
    auto verify_torus_naive(const PeriodicCode & code, Coord r) -> VerificationReport;

    /// Smallest per-coordinate factors that make `code` acceptable to verify_torus_naive.
    auto oracle_inflation_factors(const PeriodicCode & code, Coord r) -> std::vector<Coord>;

    /// Re-derives the failure from identifying_set: true iff the witness really fails.
    auto witness_replays(const PeriodicCode & code, Coord r, const Witness & witness) -> bool;

    auto describe(const Witness & witness) -> std::string;
    auto verdict_name(Verdict v) -> std::string;
}
