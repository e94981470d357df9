#pragma once

#include <idcodes/lattice.hh>
#include <idcodes/rational.hh>

#include <string>
#include <vector>

namespace idcodes
{
    enum class BoundKind
    {
        LowerTheorem3,
        LowerKarpovsky,
        UpperTheorem5,
        UpperDominatingSetLift,
        UpperKingLift,
        TabulatedFigure1
    };

    auto kind_name(BoundKind k) -> std::string;
    auto is_lower(BoundKind k) -> bool;
    auto is_upper(BoundKind k) -> bool;

    struct BoundEntry
    {
        int n = 0;
        Coord r = 0;
        BoundKind kind = BoundKind::LowerTheorem3;
        Rational value;
        std::string provenance;
    };

    /// ceil(log2(2n + 1)) / (b_{r+1} - b_{r-1}): a vertex and its 2n neighbours need
    /// distinct traces on the shell B_{r+1} \ B_{r-1}.
    auto lower_bound_theorem3(int n, Coord r) -> Rational;

    /// 1 / (n + 1).
    auto lower_bound_karpovsky(int n) -> Rational;

    /// (n + 2)^{n-1} / (2^n r0^{n-1}), the density of theorem5_code(n, r).
    auto upper_bound_theorem5(int n, Coord r) -> Rational;

    /// upper_bound_theorem5 / lower_bound_theorem3.
    auto bound_ratio(int n, Coord r) -> Rational;

    /// ceil(log2(x)) for x >= 1.
    auto ceil_log2(std::int64_t x) -> int;

    /// The small-n table of 1-identifying densities on L_n, n = 1 .. 10. Upper values
    /// for n in {1, 3, 4, 5, 6, 7, 8} are recomputed from constructed codes; the rows
    /// that rest only on external results carry TabulatedFigure1.
    auto figure1_table() -> std::vector<BoundEntry>;

    auto render_table_text(const std::vector<BoundEntry> & entries) -> std::string;

    /// Columns: n,r,kind,numerator,denominator,provenance
    auto render_table_csv(const std::vector<BoundEntry> & entries) -> std::string;
}
