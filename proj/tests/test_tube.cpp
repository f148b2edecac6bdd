#include <random>

#include <gtest/gtest.h>

#include <tubecluster/tube.hpp>
#include <tubecluster/verify.hpp>

using namespace tubecluster;

namespace {

TubeObject obj(int n, int a, int b)
{
    return TubeObject(TubeRank(n), a, b);
}

} // namespace

TEST(TubeRank, RejectsRankBelowTwo)
{
    EXPECT_THROW(TubeRank(1), InputError);
    EXPECT_THROW(TubeRank(0), InputError);
    EXPECT_NO_THROW(TubeRank(2));
}

TEST(TubeObject, NormalizesFirstCoordinate)
{
    EXPECT_EQ(obj(3, 4, 1), obj(3, 1, 1));
    EXPECT_EQ(obj(3, 0, 2), obj(3, 3, 2));
    EXPECT_EQ(obj(3, -5, 2).a(), 1);
    EXPECT_THROW(obj(3, 1, 0), InputError);
}

TEST(Tau, ShiftsFirstCoordinateOnly)
{
    EXPECT_EQ(tau(obj(3, 1, 1)), obj(3, 3, 1));
    EXPECT_EQ(tau(obj(3, 2, 5)), obj(3, 1, 5));
    for (int n = 2; n <= 6; ++n)
        for (const auto& x : enumerate_indecs(n, 2 * n)) {
            EXPECT_EQ(tau_inv(tau(x)), x);
            EXPECT_EQ(tau(tau_inv(x)), x);
        }
}

TEST(HomDimTube, WorkedExamples)
{
    EXPECT_EQ(hom_dim_tube(obj(3, 1, 1), obj(3, 1, 1)), 1);
    EXPECT_EQ(hom_dim_tube(obj(3, 1, 1), obj(3, 2, 1)), 0);
    EXPECT_EQ(hom_dim_tube(obj(3, 1, 2), obj(3, 2, 1)), 1);
    EXPECT_EQ(hom_dim_tube(obj(3, 1, 6), obj(3, 1, 6)), 2);
}

TEST(HomDimTube, RankMismatchIsAnError)
{
    EXPECT_THROW(hom_dim_tube(obj(3, 1, 1), obj(4, 1, 1)), InputError);
    EXPECT_THROW(hom_dim_oracle(obj(3, 1, 1), obj(4, 1, 1)), InputError);
    EXPECT_THROW(hom_dim_cluster(obj(3, 1, 1), obj(4, 1, 1)), InputError);
    EXPECT_THROW(ext_dim_cluster(obj(3, 1, 1), obj(4, 1, 1)), InputError);
}

TEST(BuildRep, Simple)
{
    const auto rep = build_rep(obj(3, 1, 1));
    EXPECT_EQ(rep.dims, (std::vector<int>{1, 0, 0}));
    for (const auto& m : rep.arrowMaps)
        for (const auto& row : m)
            for (auto v : row)
                EXPECT_EQ(v, 0);
}

TEST(BuildRep, FullCycleHasSocleAtVertexOne)
{
    const auto rep = build_rep(obj(3, 1, 3));
    EXPECT_EQ(rep.dims, (std::vector<int>{1, 1, 1}));
    // arrow out of vertex 1 kills v_1; arrows out of 2 and 3 are the unit maps
    EXPECT_EQ(rep.arrowMaps[0], (IntMatrix{{0}}));
    EXPECT_EQ(rep.arrowMaps[1], (IntMatrix{{1}}));
    EXPECT_EQ(rep.arrowMaps[2], (IntMatrix{{1}}));
}

TEST(BuildRep, LongerThanRank)
{
    const auto rep = build_rep(obj(3, 2, 4));
    EXPECT_EQ(rep.total_dim(), 4);
    EXPECT_EQ(rep.dims, (std::vector<int>{1, 2, 1}));
}

TEST(BuildRep, CycleCompositeIsNilpotent)
{
    for (int n = 2; n <= 5; ++n)
        for (const auto& x : enumerate_indecs(n, 2 * n)) {
            const auto rep = build_rep(x);
            ASSERT_EQ(rep.total_dim(), x.b());
            // applying the arrows b times to any basis vector gives zero
            int nonzero = 0;
            for (const auto& m : rep.arrowMaps)
                for (const auto& row : m)
                    for (auto v : row)
                        nonzero += v != 0;
            EXPECT_EQ(nonzero, x.b() - 1);
        }
}

TEST(HomDimOracle, FrozenValues)
{
    EXPECT_EQ(hom_dim_oracle(obj(3, 1, 1), obj(3, 1, 1)), 1);
    EXPECT_EQ(hom_dim_oracle(obj(3, 1, 2), obj(3, 2, 1)), 1);
    EXPECT_EQ(hom_dim_oracle(obj(3, 1, 6), obj(3, 1, 6)), 2);
    EXPECT_EQ(hom_dim_oracle(obj(3, 1, 2), obj(3, 3, 2)), hom_dim_tube(obj(3, 1, 2), obj(3, 3, 2)));
    EXPECT_EQ(hom_dim_oracle(obj(2, 1, 4), obj(2, 1, 4)), 2);
    EXPECT_EQ(hom_dim_oracle(obj(2, 1, 4), obj(2, 2, 3)), 2);
}

TEST(HomDimOracle, AgreesWithFormulaOnRandomPairs)
{
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 9)(rng);
        std::uniform_int_distribution<int> coord(1, n);
        std::uniform_int_distribution<int> length(1, 3 * n);
        const auto x = obj(n, coord(rng), length(rng));
        const auto y = obj(n, coord(rng), length(rng));
        ASSERT_EQ(hom_dim_tube(x, y), hom_dim_oracle(x, y)) << "n=" << n << " (" << to_string(x) << ") -> ("
                                                            << to_string(y) << ")";
    }
}

TEST(HomDimCluster, WorkedExamples)
{
    EXPECT_EQ(hom_dim_cluster(obj(3, 1, 2), obj(3, 1, 2)), 2);
    EXPECT_EQ(hom_dim_cluster(obj(3, 1, 1), obj(3, 2, 1)), 1);
    EXPECT_EQ(hom_dim_cluster(obj(2, 1, 1), obj(2, 1, 1)), 2);
}

TEST(ExtDimCluster, WorkedExamples)
{
    EXPECT_EQ(ext_dim_cluster(obj(3, 1, 2), obj(3, 1, 2)), 0);
    EXPECT_EQ(ext_dim_cluster(obj(3, 1, 3), obj(3, 1, 3)), 2);
    EXPECT_EQ(ext_dim_cluster(obj(3, 1, 2), obj(3, 2, 2)), 2);
}

TEST(ExtDimCluster, SymmetricAndBoundsTubeHom)
{
    for (int n = 2; n <= 6; ++n) {
        const auto objs = enumerate_indecs(n, 2 * n);
        for (const auto& x : objs)
            for (const auto& y : objs) {
                ASSERT_EQ(ext_dim_cluster(x, y), ext_dim_cluster(y, x));
                ASSERT_GE(hom_dim_cluster(x, y), hom_dim_tube(x, y));
            }
    }
}

TEST(IsRigidIndec, BoundaryAtRankMinusOne)
{
    EXPECT_TRUE(is_rigid_indec(obj(3, 1, 2)));
    EXPECT_FALSE(is_rigid_indec(obj(3, 1, 3)));
    EXPECT_TRUE(is_rigid_indec(obj(8, 5, 7)));
    for (int n = 2; n <= 6; ++n)
        for (const auto& x : enumerate_indecs(n, 2 * n))
            EXPECT_EQ(is_rigid_indec(x), ext_dim_cluster(x, x) == 0);
}

TEST(WingContains, WorkedExamples)
{
    EXPECT_TRUE(wing_contains(obj(3, 1, 2), obj(3, 2, 1)));
    EXPECT_FALSE(wing_contains(obj(3, 1, 2), obj(3, 3, 1)));
    for (const auto& x : enumerate_indecs(4, 3))
        EXPECT_TRUE(wing_contains(x, x));
}

TEST(WingContains, WrapsAroundTheTube)
{
    // top (3,3) at n=4 covers socles 3, 4, 1 (= 5)
    EXPECT_TRUE(wing_contains(obj(4, 3, 3), obj(4, 1, 1)));
    EXPECT_TRUE(wing_contains(obj(4, 3, 3), obj(4, 4, 2)));
    EXPECT_FALSE(wing_contains(obj(4, 3, 3), obj(4, 2, 1)));
    EXPECT_FALSE(wing_contains(obj(4, 3, 3), obj(4, 1, 2)));
}

TEST(HammockConditions, MatchExtOnRigidPairs)
{
    for (int n = 2; n <= 7; ++n)
        EXPECT_TRUE(suites::hom(n).checks.back().passed) << suites::hom(n).checks.back().detail;
}
