#include <idcodes/bounds.hh>
#include <idcodes/checked.hh>
#include <idcodes/constructions.hh>

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace idcodes;

namespace
{
    // Points with r - 1 < |x|_1 <= r + 1, counted over the cube.
    auto brute_force_shell(int n, Coord r) -> std::int64_t
    {
        std::int64_t count = 0;
        const Coord R = r + 1;
        std::vector<Coord> x(static_cast<std::size_t>(n), -R);
        while (true) {
            Coord norm = 0;
            for (auto c : x)
                norm += std::abs(c);
            count += norm == r || norm == r + 1;
            std::size_t i = 0;
            while (i < x.size() && x[i] == R)
                x[i++] = -R;
            if (i == x.size())
                break;
            ++x[i];
        }
        return count;
    }
}

TEST(LowerBound, ShellExamples)
{
    EXPECT_EQ(lower_bound_theorem3(2, 1), Rational(1, 4));
    EXPECT_EQ(lower_bound_theorem3(3, 1), Rational(1, 8));
    EXPECT_EQ(lower_bound_theorem3(2, 2), Rational(3, 20));
    EXPECT_THROW(lower_bound_theorem3(1, 1), std::invalid_argument);
    EXPECT_THROW(lower_bound_theorem3(2, 0), std::invalid_argument);
}

TEST(LowerBound, MatchesBruteForceShell)
{
    for (int n = 2 ; n <= 4 ; ++n)
        for (Coord r = 1 ; r <= 5 ; ++r)
            EXPECT_EQ(lower_bound_theorem3(n, r), Rational(ceil_log2(2 * n + 1), brute_force_shell(n, r)));
}

TEST(LowerBound, Karpovsky)
{
    EXPECT_EQ(lower_bound_karpovsky(3), Rational(1, 4));
    EXPECT_EQ(lower_bound_karpovsky(7), Rational(1, 8));
    EXPECT_EQ(lower_bound_karpovsky(4), Rational(1, 5));
}

TEST(CeilLog2, Values)
{
    EXPECT_EQ(ceil_log2(1), 0);
    EXPECT_EQ(ceil_log2(5), 3);
    EXPECT_EQ(ceil_log2(8), 3);
    EXPECT_EQ(ceil_log2(9), 4);
}

TEST(UpperBound, Examples)
{
    EXPECT_EQ(upper_bound_theorem5(3, 5), Rational(1, 8));
    EXPECT_EQ(upper_bound_theorem5(2, 2), Rational(1, 2));
    EXPECT_EQ(upper_bound_theorem5(4, 3), Rational(1, 2));
    EXPECT_THROW(upper_bound_theorem5(3, 2), std::invalid_argument);
}

TEST(Ratio, Examples)
{
    EXPECT_EQ(bound_ratio(3, 5), Rational(1, 8) * Rational(brute_force_shell(3, 5), 3));
    EXPECT_EQ(bound_ratio(3, 5), Rational(31, 3));
    for (int n = 2 ; n <= 5 ; ++n)
        for (Coord r = n + 2 ; r <= 40 ; ++r)
            EXPECT_GE(bound_ratio(n, r), Rational(1)) << n << "," << r;
}

TEST(Ratio, ConvergesOnResidueZeroRadii)
{
    for (int n = 2 ; n <= 4 ; ++n) {
        Coord unit = (n % 2 == 1) ? n + 2 : (n + 2) / 2;
        double previous = 0.0, last_step = 1e9;
        for (Coord r = unit * 4 ; r <= 60 ; r += unit) {
            double value = bound_ratio(n, r).to_double();
            if (previous != 0.0) {
                double step = std::abs(value - previous);
                EXPECT_LE(step, last_step + 1e-12);
                last_step = step;
            }
            previous = value;
        }
        EXPECT_LT(last_step, 0.05 * previous);
    }
}

TEST(ThetaEvidence, ScaledBounds)
{
    for (int n = 2 ; n <= 4 ; ++n) {
        Coord unit = (n % 2 == 1) ? n + 2 : (n + 2) / 2;
        std::optional<Rational> constant;
        for (Coord r = unit ; r <= 60 ; r += unit) {
            auto scaled = upper_bound_theorem5(n, r) * Rational(checked_pow(r, n - 1));
            if (constant) {
                EXPECT_EQ(scaled, *constant);
            }
            constant = scaled;
        }
        double limit = std::tgamma(n) * ceil_log2(2 * n + 1) / std::pow(2.0, n + 1);
        double at40 = (lower_bound_theorem3(n, 40) * Rational(checked_pow(40, n - 1))).to_double();
        EXPECT_NEAR(at40 / limit, 1.0, 0.05) << "n=" << n;
    }
}

TEST(BoundsTable, Rows)
{
    auto table = figure1_table();
    std::map<int, std::map<BoundKind, Rational>> rows;
    for (const auto & e : table) {
        EXPECT_EQ(e.r, 1);
        EXPECT_FALSE(e.provenance.empty());
        rows[e.n][e.kind] = e.value;
    }
    ASSERT_EQ(rows.size(), 10u);

    EXPECT_EQ(rows[1][BoundKind::UpperDominatingSetLift], Rational(1, 2));
    EXPECT_EQ(rows[2][BoundKind::TabulatedFigure1], Rational(7, 20));
    EXPECT_EQ(rows[4][BoundKind::LowerKarpovsky], Rational(1, 5));
    EXPECT_EQ(rows[4][BoundKind::UpperKingLift], Rational(2, 9));
    EXPECT_EQ(rows[5][BoundKind::UpperDominatingSetLift], Rational(7, 32));
    EXPECT_EQ(rows[6][BoundKind::UpperDominatingSetLift], Rational(3, 16));
    EXPECT_EQ(rows[8][BoundKind::LowerKarpovsky], Rational(1, 9));
    EXPECT_EQ(rows[8][BoundKind::UpperDominatingSetLift], Rational(1, 8));
    EXPECT_EQ(rows[9][BoundKind::TabulatedFigure1], Rational(31, 256));
    EXPECT_EQ(rows[10][BoundKind::TabulatedFigure1], Rational(15, 128));

    for (int n : {1, 3, 7})
        EXPECT_EQ(rows[n][BoundKind::LowerKarpovsky], rows[n][BoundKind::UpperDominatingSetLift]) << n;
    for (auto & [n, kinds] : rows)
        for (auto & [lk, lo] : kinds)
            for (auto & [uk, hi] : kinds)
                if (is_lower(lk) && (is_upper(uk) || uk == BoundKind::TabulatedFigure1)) {
                    EXPECT_LE(lo, hi) << n;
                }
}

TEST(BoundsTable, CsvExport)
{
    std::vector<BoundEntry> entries{{4, 1, BoundKind::UpperKingLift, Rational(2, 9), "king \"lift\""}};
    EXPECT_EQ(render_table_csv(entries),
            "n,r,kind,numerator,denominator,provenance\n4,1,upper-king-lift,2,9,\"king \"\"lift\"\"\"\n");
}

TEST(Rational, Arithmetic)
{
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, -2).denominator(), 2);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
    EXPECT_EQ(Rational(2, 9) / Rational(1, 5), Rational(10, 9));
    EXPECT_LT(Rational(1, 5), Rational(2, 9));
    EXPECT_EQ(Rational::parse("2/9"), Rational(2, 9));
    EXPECT_EQ(Rational(7).to_string(), "7");
    EXPECT_EQ(Rational(3, 20).to_string(), "3/20");
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
    EXPECT_THROW(Rational::parse("2/x"), std::invalid_argument);
    EXPECT_THROW(Rational(INT64_MAX - 1) * Rational(3), std::overflow_error);
}
