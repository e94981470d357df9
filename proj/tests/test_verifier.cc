#include <idcodes/constructions.hh>
#include <idcodes/verifier.hh>

#include <gtest/gtest.h>

#include <random>

using namespace idcodes;

namespace
{
    auto random_code(std::mt19937 & rng, Metric metric, Coord max_period) -> PeriodicCode
    {
        std::uniform_int_distribution<Coord> period(1, max_period);
        std::vector<Coord> periods{period(rng), period(rng)};
        std::vector<Point> words;
        for (const auto & p : box_points(periods))
            if (rng() % 2 == 0)
                words.push_back(p);
        if (words.empty())
            words.push_back(Point::origin(2));
        return PeriodicCode(metric, periods, words);
    }
}

TEST(Verify, EvenIntegers)
{
    PeriodicCode even(Metric::L1, {2}, {{0}});
    auto report = verify_identifying(even, 1);
    EXPECT_EQ(report.verdict, Verdict::Identifying);
    EXPECT_FALSE(report.witness);
    EXPECT_EQ(report.vertices_checked, 2u);
    EXPECT_EQ(report.pairs_checked, 2u * 4u);
}

TEST(Verify, WholeLineIsIdentifying)
{
    EXPECT_EQ(verify_identifying(PeriodicCode(Metric::L1, {1}, {{0}}), 1).verdict, Verdict::Identifying);
}

TEST(Verify, EmptyBallWitness)
{
    PeriodicCode sparse(Metric::L1, {4}, {{0}});
    auto report = verify_identifying(sparse, 1);
    EXPECT_EQ(report.verdict, Verdict::NotIdentifying);
    ASSERT_TRUE(report.witness);
    EXPECT_EQ(*report.witness, Witness(EmptyBall{{2}}));
    EXPECT_TRUE(witness_replays(sparse, 1, *report.witness));
}

TEST(Verify, IndistinguishableWitness)
{
    // period 3, codewords 0 and 1: I(0) = {0, 1} = I(1)
    PeriodicCode c(Metric::L1, {3}, {{0}, {1}});
    auto report = verify_identifying(c, 1);
    ASSERT_EQ(report.verdict, Verdict::NotIdentifying);
    EXPECT_EQ(*report.witness, Witness(Indistinguishable{{0}, {1}}));
    EXPECT_TRUE(witness_replays(c, 1, *report.witness));
}

TEST(Verify, HammingLiftDimensionThree)
{
    auto code = lift_dominating_set(DominatingSet(3, {0b000, 0b111}));
    EXPECT_EQ(verify_identifying(code, 1).verdict, Verdict::Identifying);
}

TEST(Verify, RadiusMustBePositive)
{
    EXPECT_THROW(verify_identifying(PeriodicCode(Metric::L1, {2}, {{0}}), 0), std::invalid_argument);
}

TEST(TorusOracle, Examples)
{
    PeriodicCode even8(Metric::L1, {8}, {{0}, {2}, {4}, {6}});
    EXPECT_EQ(verify_torus_naive(even8, 1).verdict, Verdict::Identifying);

    PeriodicCode single8(Metric::L1, {8}, {{0}});
    auto report = verify_torus_naive(single8, 1);
    EXPECT_EQ(report.verdict, Verdict::NotIdentifying);
    EXPECT_TRUE(std::holds_alternative<EmptyBall>(*report.witness));
}

TEST(TorusOracle, RejectsSmallPeriods)
{
    EXPECT_THROW(verify_torus_naive(PeriodicCode(Metric::L1, {6}, {{0}}), 1), std::invalid_argument);
    EXPECT_NO_THROW(verify_torus_naive(PeriodicCode(Metric::L1, {11}, {{0}}), 2));
}

TEST(TorusOracle, AgreesWithLatticeVerifier)
{
    std::mt19937 rng(2024);
    int not_identifying = 0;
    for (auto metric : {Metric::L1, Metric::King})
        for (int trial = 0 ; trial < 60 ; ++trial) {
            auto code = random_code(rng, metric, 4);
            auto lattice = verify_identifying(code, 1);
            auto torus = verify_torus_naive(inflate(code, oracle_inflation_factors(code, 1)), 1);
            EXPECT_EQ(lattice.verdict, torus.verdict) << code_to_json_string(code);
            for (const auto & report : {lattice, torus})
                if (report.witness) {
                    EXPECT_TRUE(witness_replays(code, 1, *report.witness));
                }
            not_identifying += lattice.verdict == Verdict::NotIdentifying;
        }
    EXPECT_GT(not_identifying, 0);
    EXPECT_LT(not_identifying, 120);
}

TEST(TorusOracle, AgreesAtRadiusTwo)
{
    std::mt19937 rng(99);
    for (int trial = 0 ; trial < 15 ; ++trial) {
        auto code = random_code(rng, Metric::L1, 3);
        auto torus = verify_torus_naive(inflate(code, oracle_inflation_factors(code, 2)), 2);
        EXPECT_EQ(verify_identifying(code, 2).verdict, torus.verdict) << code_to_json_string(code);
    }
}

TEST(Verify, AddingCodewordsKeepsBallsNonempty)
{
    std::mt19937 rng(7);
    for (int trial = 0 ; trial < 40 ; ++trial) {
        auto code = random_code(rng, Metric::L1, 4);
        auto report = verify_identifying(code, 1);
        bool empty_ball = report.witness && std::holds_alternative<EmptyBall>(*report.witness);
        if (empty_ball)
            continue;
        for (const auto & extra : box_points(code.periods())) {
            if (code.contains(extra))
                continue;
            auto words = code.words();
            words.push_back(extra);
            auto bigger = verify_identifying(PeriodicCode(code.metric(), code.periods(), words), 1);
            EXPECT_FALSE(bigger.witness && std::holds_alternative<EmptyBall>(*bigger.witness));
            break;
        }
    }
}

TEST(Verify, DeterministicAcrossThreadCounts)
{
    std::mt19937 rng(3);
    for (int trial = 0 ; trial < 20 ; ++trial) {
        auto code = random_code(rng, Metric::King, 6);
        auto serial = verify_identifying(code, 1, 1);
        EXPECT_EQ(verify_identifying(code, 1, 1), serial);
        EXPECT_EQ(verify_identifying(code, 1, 3), serial);
        EXPECT_EQ(verify_identifying(code, 1, 8), serial);
    }
}
