#include "test_support.hpp"

#include <numeric>

using namespace hvx;
using namespace hvx::testing;

namespace
{

const Front staircase3{{1, 3}, {2, 2}, {3, 1}};
const ReferencePoint ref44{4, 4};

void expect_table_near(const ContributionTable& got, const ContributionTable& want, double rel)
{
    ASSERT_EQ(got.values.size(), want.values.size());
    for (std::size_t i = 0; i < got.values.size(); ++i)
        EXPECT_TRUE(rel_near(got.values[i], want.values[i], rel, want.total_hv)) << "entry " << i;
    EXPECT_TRUE(rel_near(got.total_hv, want.total_hv, rel));
}

} // namespace

TEST(BoundAndFilter, PointBelowBothNeighbours)
{
    // Both points are weakly dominated by p, so both delimiters are inner.
    const auto del = bound_and_filter(make_point({0, 0}), Front{{1, 3}, {3, 1}});
    EXPECT_EQ(del.inner, (std::vector<Index>{0, 1}));
    EXPECT_TRUE(del.outer.empty());
    EXPECT_EQ(del.joined.size(), 2);
}

TEST(BoundAndFilter, OuterDelimitersAndJoins)
{
    const Front s{{1, 3}, {3, 1}, {3.5, 3.5}};
    const auto del = bound_and_filter(make_point({2, 2}), s);
    EXPECT_TRUE(del.inner.empty());
    EXPECT_EQ(del.outer, (std::vector<Index>{0, 1}));
    ASSERT_EQ(del.joined.size(), 2);
    const ReferencePoint r{4, 4};
    const double box = 4;
    EXPECT_DOUBLE_EQ(box - hv(del.joined, r).value, one_contribution(make_point({2, 2}), s, r));
}

TEST(BoundAndFilter, BoundingMatchesOracleOnRandomInstances)
{
    Rng rng(70);
    for (Index d = 2; d <= 5; ++d)
        for (int rep = 0; rep < 15; ++rep)
        {
            const Front s = random_points(8, d, rng, rep % 2 == 0);
            const auto r = reference_for(s);
            const Point p = random_points(1, d, rng).point(0).transpose();
            const auto del = bound_and_filter(p, s);
            double box = 1;
            for (Index j = 0; j < d; ++j)
                box *= r[j] - p(j);
            EXPECT_TRUE(rel_near(box - hv(del.joined, r).value, contribution_oracle(p, s, r), 1e-9, box));
        }
}

TEST(ValidateFront, ClipAndStrict)
{
    const Front s{{1, 1}, {3, 0}, {2, 1}};
    const ReferencePoint r{2, 2};
    const auto clipped = validate_front(s, r);
    EXPECT_EQ(clipped.kept, (std::vector<Index>{0, 2}));
    EXPECT_EQ(clipped.dropped, 1);
    try
    {
        validate_front(s, r, ClipPolicy::strict);
        FAIL() << "expected a reference violation";
    }
    catch (const ReferenceViolation& e)
    {
        EXPECT_EQ(e.index(), 1);
    }
}

TEST(OneContribution, PointBetweenTwoNeighbours)
{
    EXPECT_DOUBLE_EQ(one_contribution(make_point({2, 2}), Front{{1, 3}, {3, 1}}, ref44), 1);
}

TEST(OneContribution, DominatedPointGivesZero)
{
    EXPECT_EQ(one_contribution(make_point({2.5, 2.5}), staircase3, ref44), 0);
    EXPECT_EQ(one_contribution(make_point({6, 6, 6}), six_point_front(), six_point_ref), 0);
}

TEST(OneContribution, SixPointFirstPoint)
{
    const Front s = six_point_front();
    EXPECT_DOUBLE_EQ(one_contribution(s.point(0), s, six_point_ref), kSixPointFirst);
    EXPECT_DOUBLE_EQ(one_contribution(s.point(0), s.without(0), six_point_ref), kSixPointFirst);
}

TEST(OneContribution, MatchesOracle)
{
    Rng rng(71);
    for (Index d = 2; d <= 5; ++d)
        for (int rep = 0; rep < 20; ++rep)
        {
            const Front s = mixed_instance(rng, d, 9);
            const auto r = reference_for(s);
            const Point p = random_points(1, d, rng, rep % 3 == 0).point(0).transpose();
            EXPECT_TRUE(rel_near(one_contribution(p, s, r), contribution_oracle(p, s, r), 1e-9, hv(s, r).value));
        }
}

TEST(OneContribution, RejectsDimensionMismatch)
{
    EXPECT_THROW(one_contribution(make_point({1, 1, 1}), staircase3, ref44), DimensionMismatch);
}

TEST(JointContribution, JoinOfTwoPointsOnEmptySet)
{
    EXPECT_DOUBLE_EQ(joint_contribution(make_point({1, 4}), make_point({2, 2}), Front(2), ReferencePoint{5, 5}), 3);
}

TEST(JointContribution, SamePointIsOneContribution)
{
    const Front s = six_point_front();
    EXPECT_DOUBLE_EQ(joint_contribution(s.point(2), s.point(2), s, six_point_ref), one_contribution(s.point(2), s, six_point_ref));
}

TEST(JointContribution, SeparatedRegionsShareNothing)
{
    // (2, 2) covers the join of the two outer points.
    const Front s{{1, 3}, {2, 2}, {3, 1}};
    EXPECT_EQ(joint_contribution(s.point(0), s.point(2), s, ref44), 0);
}

TEST(JointContribution, SymmetricAndMatchesDefinition)
{
    Rng rng(72);
    for (Index d = 2; d <= 5; ++d)
        for (int rep = 0; rep < 10; ++rep)
        {
            const Front s = random_points(8, d, rng);
            const auto r = reference_for(s);
            const auto p = s.point(0), q = s.point(1);
            const double pq = joint_contribution(p, q, s, r);
            EXPECT_EQ(pq, joint_contribution(q, p, s, r));
            // H((S - {p,q}) + (p v q)) - H(S - {p,q})
            Front rest = s.subset({2, 3, 4, 5, 6, 7});
            const double without = hv_grid(rest, r);
            rest.push_back(join(p, q));
            EXPECT_TRUE(rel_near(pq, hv_grid(rest, r) - without, 1e-9, without));
        }
}

TEST(AllContributions2d, StaircaseOfThree)
{
    const auto t = all_contributions_2d(staircase3, ref44);
    EXPECT_EQ(t.values, (std::vector<double>{1, 1, 1}));
    EXPECT_DOUBLE_EQ(t.total_hv, 6);
}

TEST(AllContributions2d, SinglePointAndDominatedEntry)
{
    EXPECT_EQ(all_contributions_2d(Front{{1, 1}}, ReferencePoint{2, 2}).values, (std::vector<double>{1}));
    const auto t = all_contributions_2d(Front{{1, 3}, {3, 3}, {3, 1}}, ref44);
    EXPECT_EQ(t.values[1], 0);
    EXPECT_DOUBLE_EQ(t.values[0], 2 * 1);
}

TEST(AllContributions2d, RejectsOtherDimensions)
{
    EXPECT_THROW(all_contributions_2d(six_point_front(), six_point_ref), DimensionMismatch);
}

TEST(AllContributions3d, SixPointRegression)
{
    const auto t = all_contributions_3d(six_point_front(), six_point_ref);
    ASSERT_EQ(t.values.size(), 6u);
    for (std::size_t i = 0; i < 6; ++i)
        EXPECT_DOUBLE_EQ(t.values[i], kSixPointContributions[i]) << "point " << i;
    EXPECT_DOUBLE_EQ(t.total_hv, kSixPointHv);
}

TEST(AllContributions3d, DisjointBoxes)
{
    const Front s{{0, 1, 1}, {1, 0, 0}};
    const auto t = all_contributions_3d(s, ReferencePoint{1, 2, 2});
    // The second point's box is empty (x = r_x), so the first keeps its whole box.
    EXPECT_DOUBLE_EQ(t.values[0], 1);
    EXPECT_EQ(t.values[1], 0);
    const Front far{{0, 2, 2}, {2, 0, 0}};
    const auto u = all_contributions_3d(far, ReferencePoint{3, 3, 3});
    EXPECT_DOUBLE_EQ(u.values[0], 3 * 1 * 1 - 1 * 1 * 1);
    EXPECT_DOUBLE_EQ(u.values[1], 1 * 3 * 3 - 1 * 1 * 1);
}

TEST(AllContributions3d, ObjectivePermutationKeepsValues)
{
    Rng rng(73);
    const std::vector<std::vector<Index>> perms{{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int rep = 0; rep < 10; ++rep)
    {
        const Front s = mixed_instance(rng, 3, 15);
        const auto r = reference_for(s);
        const auto base = all_contributions_3d(s, r);
        for (const auto& perm : perms)
        {
            const Front ps(PointMatrix(s.matrix()(Eigen::all, perm)));
            const ReferencePoint pr(Point(r.coords()(perm)));
            expect_table_near(all_contributions_3d(ps, pr), base, 1e-12);
        }
    }
}

TEST(AllContributions, RemovalIdentity)
{
    Rng rng(74);
    for (Index d = 2; d <= 5; ++d)
        for (int rep = 0; rep < 25; ++rep)
        {
            const Front s = mixed_instance(rng, d, 10);
            const auto r = reference_for(s, rep % 4 == 0 ? -0.2 : 0.1);
            const auto t = all_contributions(s, r);
            const double total = hv_grid(s, r);
            EXPECT_TRUE(rel_near(t.total_hv, total, 1e-9));
            double sum = 0;
            for (Index i = 0; i < s.size(); ++i)
            {
                const double v = t.values[std::size_t(i)];
                EXPECT_GE(v, 0);
                EXPECT_TRUE(rel_near(v, total - hv_grid(s.without(i), r), 1e-9, total)) << "d=" << d << " i=" << i;
                sum += v;
            }
            EXPECT_LE(sum, total * (1 + 1e-12) + 1e-300);
        }
}

TEST(AllContributions, RepeatedPointsContributeNothing)
{
    for (Index d = 2; d <= 5; ++d)
    {
        const Front s(PointMatrix(PointMatrix::Constant(4, d, 0.5)));
        const auto t = all_contributions(s, ReferencePoint(Point(Point::Ones(d))));
        EXPECT_EQ(t.values, std::vector<double>(4, 0.0));
    }
}

TEST(AllContributions, FourObjectivesAgainstGrid)
{
    Rng rng(75);
    const Front s = random_nondominated(8, 4, rng);
    const auto r = reference_for(s);
    const auto t = all_contributions(s, r);
    for (Index i = 0; i < s.size(); ++i)
        EXPECT_TRUE(rel_near(t.values[std::size_t(i)], contribution_oracle(s.point(i), s, r), 1e-9, t.total_hv));
}

TEST(LeastContributor, TieGoesToLowestIndex)
{
    const auto [i, v] = least_contributor(staircase3, ref44);
    EXPECT_EQ(i, 0);
    EXPECT_DOUBLE_EQ(v, 1);
}

TEST(LeastContributor, DominatedPointAndSixPoint)
{
    const auto [i, v] = least_contributor(Front{{1, 3}, {2, 2}, {2.5, 2.5}, {3, 1}}, ref44);
    EXPECT_EQ(i, 2);
    EXPECT_EQ(v, 0);
    const auto [j, w] = least_contributor(six_point_front(), six_point_ref);
    EXPECT_EQ(j, 3);
    EXPECT_DOUBLE_EQ(w, 12);
    EXPECT_THROW(least_contributor(Front(2), ref44), PreconditionViolation);
}

TEST(UpdateAllContributions, InsertIntoStaircase)
{
    const Front s{{1, 3}, {3, 1}};
    const auto t = all_contributions(s, ref44);
    const auto u = update_all_contributions(s, ref44, t, make_point({2, 2}), UpdateMode::incremental);
    // Rows keep their order and p is appended: {(1,3), (3,1), (2,2)}.
    EXPECT_EQ(u.values, (std::vector<double>{1, 1, 1}));
    EXPECT_DOUBLE_EQ(u.total_hv, 6);
}

TEST(UpdateAllContributions, PointCoveredByTwoChangesNothing)
{
    const auto t = all_contributions(staircase3, ref44);
    const auto u = update_all_contributions(staircase3, ref44, t, make_point({3, 3}), UpdateMode::incremental);
    EXPECT_EQ(u.values, (std::vector<double>{1, 1, 1, 0}));
    EXPECT_EQ(u.total_hv, t.total_hv);
}

TEST(UpdateAllContributions, PointCoveredByOneShrinksItsDominator)
{
    // (2.5, 2.5) lies inside the exclusive box of (2, 2) only.
    const Front s{{1, 3.5}, {2, 2}, {3.5, 1}};
    const auto t = all_contributions(s, ref44);
    const auto u = update_all_contributions(s, ref44, t, make_point({2.5, 2.5}), UpdateMode::incremental);
    Front after = s;
    after.push_back(make_point({2.5, 2.5}));
    expect_table_near(u, all_contributions(after, ref44), 1e-12);
    EXPECT_LT(u.values[1], t.values[1]);
    EXPECT_EQ(u.values[0], t.values[0]);
}

TEST(UpdateAllContributions, RemoveThenAddRestores)
{
    Rng rng(76);
    for (Index d = 2; d <= 4; ++d)
    {
        const Front s = random_nondominated(9, d, rng);
        const auto r = reference_for(s);
        const auto t = all_contributions(s, r);
        const Point p = s.point(4).transpose();
        const auto removed = update_all_contributions(s, r, t, p, UpdateMode::decremental);
        const auto restored = update_all_contributions(s.without(4), r, removed, p, UpdateMode::incremental);
        // Restored order: p moved to the end.
        std::vector<Index> order{0, 1, 2, 3, 5, 6, 7, 8, 4};
        ContributionTable reordered{{}, t.total_hv};
        for (Index i : order)
            reordered.values.push_back(t.values[std::size_t(i)]);
        expect_table_near(restored, reordered, 1e-12);
    }
}

TEST(UpdateAllContributions, RandomSequencesMatchRecomputation)
{
    Rng rng(77);
    for (Index d = 2; d <= 5; ++d)
        for (int rep = 0; rep < 8; ++rep)
        {
            const Front pool = rep % 2 ? random_nondominated(14, d, rng) : random_points(14, d, rng, rep % 4 == 0);
            const auto r = reference_for(pool);
            Front s(d);
            auto t = all_contributions(s, r);
            for (Index i = 0; i < pool.size(); ++i)
            {
                if (s.size() > 2 && sampling::uniform(rng) < 0.35)
                {
                    const Index out = sampling::uniform_index(rng, 0, s.size() - 1);
                    const Point q = s.point(out).transpose();
                    // Decremental removal drops the first copy of q.
                    Index first = 0;
                    while (!same_point(s.point(first), q))
                        ++first;
                    t = update_all_contributions(s, r, t, q, UpdateMode::decremental);
                    s = s.without(first);
                }
                if (one_contribution(pool.point(i), s, r) >= 0 && [&] {
                        for (Index k = 0; k < s.size(); ++k)
                            if (same_point(s.point(k), pool.point(i)))
                                return false;
                        return true;
                    }())
                {
                    t = update_all_contributions(s, r, t, pool.point(i), UpdateMode::incremental);
                    s.push_back(pool.point(i));
                }
            }
            expect_table_near(t, all_contributions(s, r), 1e-9);
        }
}

TEST(UpdateAllContributions, ContributionsNeverGrowOnInsertion)
{
    Rng rng(78);
    for (Index d = 2; d <= 4; ++d)
    {
        const Front s = random_points(8, d, rng);
        const auto r = reference_for(s);
        const auto t = all_contributions(s, r);
        const auto u = update_all_contributions(s, r, t, random_points(1, d, rng).point(0), UpdateMode::incremental);
        for (std::size_t i = 0; i < t.values.size(); ++i)
            EXPECT_LE(u.values[i], t.values[i]);
    }
}

TEST(UpdateAllContributions, MembershipIsChecked)
{
    const auto t = all_contributions(staircase3, ref44);
    EXPECT_THROW(update_all_contributions(staircase3, ref44, t, make_point({2, 2}), UpdateMode::incremental),
                 PreconditionViolation);
    EXPECT_THROW(update_all_contributions(staircase3, ref44, t, make_point({0, 5}), UpdateMode::decremental),
                 PreconditionViolation);
}

TEST(UpdateAllContributions, StructureDestructiveDecomposition)
{
    // p2 and p3 are dominated by p5 only; p1 and p4 are incomparable with p5.
    Rng rng(79);
    for (Index d = 2; d <= 4; ++d)
        for (int rep = 0; rep < 10; ++rep)
        {
            const Front base = random_nondominated(3, d, rng);
            const Point p1 = base.point(0).transpose(), p5 = base.point(1).transpose(), p4 = base.point(2).transpose();
            Point p2 = p5, p3 = p5;
            for (Index j = 0; j < d; ++j)
            {
                p2(j) += 0.05 * sampling::uniform(rng);
                p3(j) += 0.05 * sampling::uniform(rng);
            }
            const ReferencePoint r(Point(Point::Constant(d, 1.5)));
            Front s14(d), s134(d), s1234(d);
            for (const Point* p : {&p1, &p4})
                s14.push_back(*p);
            s134 = s14;
            s134.push_back(p3);
            s1234 = s134;
            s1234.push_back(p2);
            const double pieces = one_contribution(p5, s14, r) - one_contribution(p3, s14, r) -
                                  one_contribution(p2, s134, r);
            EXPECT_TRUE(rel_near(pieces, one_contribution(p5, s1234, r), 1e-9, hv(s1234, r).value));
        }
}

TEST(TwoSetState, EmptyAcceptedSetGivesInclusiveVolumes)
{
    const Front s{{1, 4}, {2, 2}, {4, 1}};
    const ReferencePoint r{5, 5};
    TwoSetContributionState state(s, Front(2), r);
    EXPECT_TRUE(state.specialized());
    EXPECT_EQ(state.contributions(), (std::vector<double>{4, 9, 4}));

    // Move (2, 2) into the accepted set.
    state.erase_candidate(1);
    state = update_all_contributions_2set(state, make_point({2, 2}), UpdateMode::incremental);
    EXPECT_EQ(state.contributions(), (std::vector<double>{4 - 3, 4 - 3}));
}

TEST(TwoSetState, PointWithoutOverlapChangesNothing)
{
    // Every join with (2, 0, 0) reaches r in the first objective.
    TwoSetContributionState state(Front{{0, 1, 1}, {1, 0, 1}}, Front(3), ReferencePoint{2, 2, 2});
    const auto before = state.contributions();
    state.add_accepted(make_point({2, 0, 0}));
    EXPECT_EQ(state.contributions(), before);

    TwoSetContributionState flat(Front{{0, 1}}, Front(2), ReferencePoint{2, 2});
    flat.add_accepted(make_point({2, 0}));
    EXPECT_EQ(flat.contributions(), (std::vector<double>{2}));
}

TEST(TwoSetState, SequencesMatchRecomputation)
{
    Rng rng(80);
    for (Index d = 2; d <= 4; ++d)
        for (int rep = 0; rep < 8; ++rep)
        {
            const Front pool = random_nondominated(14, d, rng);
            const auto r = reference_for(pool);
            const Front candidates = pool.subset({0, 1, 2, 3, 4, 5, 6});
            TwoSetContributionState state(candidates, Front(d), r);
            EXPECT_EQ(state.specialized(), d <= 3);
            for (Index i = 7; i < pool.size(); ++i)
            {
                state = update_all_contributions_2set(state, pool.point(i), UpdateMode::incremental);
                if (sampling::uniform(rng) < 0.3)
                {
                    const Point q = state.accepted().point(0).transpose();
                    state = update_all_contributions_2set(state, q, UpdateMode::decremental);
                }
            }
            for (Index i = 0; i < candidates.size(); ++i)
                EXPECT_TRUE(rel_near(state.contributions()[std::size_t(i)],
                                     contribution_oracle(candidates.point(i), state.accepted(), r), 1e-9,
                                     hv(pool, r).value));
        }
}

TEST(TwoSetState, SpecializedPathRequiresNondominance)
{
    TwoSetContributionState state(Front{{1, 3}, {3, 1}}, Front(2), ref44);
    EXPECT_THROW(state.add_accepted(make_point({0.5, 0.5})), PreconditionViolation);
    EXPECT_THROW(state.add_accepted(make_point({1, 3})), PreconditionViolation);
    EXPECT_THROW(state.remove_accepted(make_point({2, 2})), PreconditionViolation);
}

TEST(TwoSetState, GenericPathAcceptsDominatedPoints)
{
    TwoSetContributionState state(Front{{1, 3}, {3, 1}, {3.5, 3.5}}, Front(2), ref44);
    EXPECT_FALSE(state.specialized());
    state.add_accepted(make_point({2, 2}));
    EXPECT_DOUBLE_EQ(state.contributions()[0], 1);
    EXPECT_DOUBLE_EQ(state.contributions()[1], 1);
    EXPECT_EQ(state.contributions()[2], 0);
}
