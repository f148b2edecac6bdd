#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include <tubecluster/rigid.hpp>
#include <tubecluster/verify.hpp>

using namespace tubecluster;

namespace {

TubeObject obj(int n, int a, int b)
{
    return TubeObject(TubeRank(n), a, b);
}

/// Test-only: every subset of rigid indecomposables of size n-1 that is
/// rigid and admits no further compatible object, by plain subset search.
std::set<std::vector<TubeObject>> brute_force_maximal(int n)
{
    const auto rigid = enumerate_rigid_indecs(n);
    const std::size_t m = rigid.size();
    std::set<std::vector<TubeObject>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<TubeObject> chosen;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1)
                chosen.push_back(rigid[i]);
        if (!is_rigid_set(chosen))
            continue;
        bool extendable = false;
        for (std::size_t i = 0; i < m && !extendable; ++i) {
            if (mask >> i & 1)
                continue;
            auto bigger = chosen;
            bigger.push_back(rigid[i]);
            extendable = is_rigid_set(bigger);
        }
        if (!extendable)
            out.insert(chosen);
    }
    return out;
}

} // namespace

TEST(IsRigidSet, WorkedExamples)
{
    EXPECT_TRUE(is_rigid_set(std::vector{obj(3, 1, 2), obj(3, 1, 1)}));
    EXPECT_FALSE(is_rigid_set(std::vector{obj(3, 1, 3)}));
    EXPECT_TRUE(is_rigid_set(std::vector<TubeObject>{}));
}

TEST(EnumerateRigidIndecs, Counts)
{
    EXPECT_EQ(enumerate_rigid_indecs(2).size(), 2u);
    EXPECT_EQ(enumerate_rigid_indecs(3).size(), 6u);
    EXPECT_EQ(enumerate_rigid_indecs(4).size(), 12u);
    EXPECT_THROW(enumerate_rigid_indecs(1), InputError);
}

TEST(EnumerateMaximalRigid, SmallRanks)
{
    const auto two = enumerate_maximal_rigid(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].summands(), std::vector{obj(2, 1, 1)});
    EXPECT_EQ(two[1].summands(), std::vector{obj(2, 2, 1)});

    const auto three = enumerate_maximal_rigid(3);
    EXPECT_EQ(three.size(), 6u);
    EXPECT_TRUE(std::count(three.begin(), three.end(), MaximalRigid(TubeRank(3), {obj(3, 1, 2), obj(3, 1, 1)})));
    EXPECT_TRUE(std::count(three.begin(), three.end(), MaximalRigid(TubeRank(3), {obj(3, 1, 2), obj(3, 2, 1)})));

    EXPECT_EQ(enumerate_maximal_rigid(4).size(), 20u);
}

TEST(EnumerateMaximalRigid, MatchesSubsetBruteForce)
{
    for (int n = 2; n <= 4; ++n) {
        const auto expected = brute_force_maximal(n);
        std::set<std::vector<TubeObject>> found;
        for (const auto& t : enumerate_maximal_rigid(n))
            found.insert(t.summands());
        EXPECT_EQ(found, expected) << "n=" << n;
    }
}

TEST(EnumerateMaximalRigid, CountsAndPerTopCatalan)
{
    for (int n = 2; n <= 8; ++n) {
        const auto all = enumerate_maximal_rigid(n);
        EXPECT_EQ(static_cast<long long>(all.size()), binomial(2 * n - 2, n - 1)) << "n=" << n;
        std::map<int, long long> per_top;
        for (const auto& t : all)
            ++per_top[top_summand(t).a()];
        for (int s = 1; s <= n; ++s)
            EXPECT_EQ(per_top[s], catalan(n - 1)) << "n=" << n << " top " << s;
    }
}

TEST(MaximalRigid, RejectsMalformedInput)
{
    const TubeRank r3(3);
    EXPECT_THROW(MaximalRigid(r3, {obj(3, 1, 1), obj(3, 2, 1)}), StructuralError);
    EXPECT_THROW(MaximalRigid(r3, {obj(3, 1, 2)}), StructuralError);
    EXPECT_THROW(MaximalRigid(r3, {obj(3, 1, 2), obj(3, 1, 2)}), StructuralError);
    EXPECT_THROW(MaximalRigid(r3, {obj(3, 1, 2), obj(3, 2, 2)}), StructuralError);
    EXPECT_THROW(MaximalRigid(r3, {obj(3, 1, 2), obj(4, 1, 1)}), InputError);
}

TEST(MaximalRigid, SortsSummandsCanonically)
{
    const MaximalRigid t(TubeRank(4), {obj(4, 1, 3), obj(4, 2, 1), obj(4, 1, 2)});
    EXPECT_EQ(t.summands(), (std::vector{obj(4, 1, 2), obj(4, 1, 3), obj(4, 2, 1)}));
    EXPECT_EQ(t.index_of(obj(4, 2, 1)), 2u);
    EXPECT_THROW(t.index_of(obj(4, 3, 1)), InputError);
}

TEST(TopSummand, Examples)
{
    EXPECT_EQ(top_summand(MaximalRigid(TubeRank(3), {obj(3, 1, 2), obj(3, 1, 1)})), obj(3, 1, 2));
    EXPECT_EQ(top_summand(MaximalRigid(TubeRank(4), {obj(4, 1, 3), obj(4, 1, 1), obj(4, 3, 1)})), obj(4, 1, 3));
    const std::vector topless{obj(3, 1, 1), obj(3, 2, 1)};
    EXPECT_THROW(top_summand(std::span<const TubeObject>(topless)), StructuralError);
    const std::vector two_tops{obj(4, 1, 3), obj(4, 2, 3)};
    EXPECT_THROW(top_summand(std::span<const TubeObject>(two_tops)), StructuralError);
}

TEST(TiltingDatum, EncodesRelativeToTop)
{
    const MaximalRigid t(TubeRank(3), {obj(3, 1, 2), obj(3, 1, 1)});
    const auto d = to_tilting_datum(t);
    EXPECT_EQ(d.topCoordinate, 1);
    EXPECT_EQ(d.wingPositions, (std::vector<WingPosition>{{0, 1}}));
    EXPECT_EQ(from_tilting_datum(t.rank(), d), t);
}

TEST(TiltingDatum, RoundTripsAndFixedTopCount)
{
    for (int n = 2; n <= 6; ++n) {
        std::map<int, int> per_top;
        for (const auto& t : enumerate_maximal_rigid(n)) {
            const auto d = to_tilting_datum(t);
            EXPECT_EQ(from_tilting_datum(t.rank(), d), t);
            ++per_top[d.topCoordinate];
        }
        for (const auto& [top, count] : per_top)
            EXPECT_EQ(count, catalan(n - 1));
    }
    int top_two = 0;
    for (const auto& t : enumerate_maximal_rigid(4))
        top_two += to_tilting_datum(t).topCoordinate == 2;
    EXPECT_EQ(top_two, 5);
}

TEST(TiltingDatum, RejectsNonExtendableData)
{
    const TubeRank r4(4);
    // two simples that are not compatible
    EXPECT_THROW(from_tilting_datum(r4, TiltingDatum{1, {{0, 1}, {1, 1}}}), InputError);
    EXPECT_THROW(from_tilting_datum(r4, TiltingDatum{1, {{2, 2}, {0, 1}}}), InputError);
    EXPECT_THROW(from_tilting_datum(r4, TiltingDatum{5, {}}), InputError);
}

TEST(Complements, WorkedExamples)
{
    const auto a = complements(AlmostComplete(TubeRank(3), {obj(3, 1, 1)}));
    EXPECT_EQ(a, std::pair(obj(3, 1, 2), obj(3, 3, 2)));
    const auto b = complements(AlmostComplete(TubeRank(3), {obj(3, 1, 2)}));
    EXPECT_EQ(b, std::pair(obj(3, 1, 1), obj(3, 2, 1)));
    const auto c = complements(AlmostComplete(TubeRank(2), {}));
    EXPECT_EQ(c, std::pair(obj(2, 1, 1), obj(2, 2, 1)));
}

TEST(Complements, RejectsBadAlmostComplete)
{
    EXPECT_THROW(AlmostComplete(TubeRank(3), {}), InputError);
    EXPECT_THROW(AlmostComplete(TubeRank(4), {obj(4, 1, 1), obj(4, 2, 1)}), InputError);
}

TEST(Complements, EveryRemovalHasExactlyTwo)
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : enumerate_maximal_rigid(n))
            for (std::size_t k = 0; k < t.size(); ++k) {
                auto rest = t.summands();
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
                const auto [x, y] = complements(AlmostComplete(t.rank(), rest));
                EXPECT_NE(x, y);
                EXPECT_TRUE(x == t[k] || y == t[k]);
            }
}

TEST(LoopDimension, TopSummandEndomorphisms)
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : enumerate_maximal_rigid(n)) {
            const auto top = top_summand(t);
            EXPECT_EQ(hom_dim_cluster(top, top), 2);
        }
}

TEST(ClusterTiltingWitness, Examples)
{
    const MaximalRigid t(TubeRank(3), {obj(3, 1, 2), obj(3, 1, 1)});
    const auto y2 = cluster_tilting_witness(t, 2);
    EXPECT_EQ(y2, obj(3, 1, 5));
    for (const auto& s : t.summands())
        EXPECT_EQ(ext_dim_cluster(s, y2), 0);
    EXPECT_GT(ext_dim_cluster(y2, y2), 0);
    EXPECT_FALSE(t.contains(y2));
    EXPECT_EQ(cluster_tilting_witness(t, 3), obj(3, 1, 8));
    EXPECT_THROW(cluster_tilting_witness(t, 1), InputError);

    for (const auto& u : enumerate_maximal_rigid(4))
        if (top_summand(u) == obj(4, 2, 3)) {
            EXPECT_EQ(cluster_tilting_witness(u, 2), obj(4, 2, 7));
        }
}

TEST(ClusterTiltingWitness, OrthogonalToEveryMaximalRigid)
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& t : enumerate_maximal_rigid(n))
            for (int k : {2, 3}) {
                const auto y = cluster_tilting_witness(t, k);
                EXPECT_FALSE(t.contains(y));
                EXPECT_GT(ext_dim_cluster(y, y), 0);
                for (const auto& s : t.summands())
                    EXPECT_EQ(ext_dim_cluster(s, y), 0);
            }
}
