#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace toric;

TEST(Incidence, PointNormalization) {
    const ProjPoint p{0, -2, 4, -6};
    EXPECT_EQ(p.coords(), to_int_vec({0, 1, -2, 3}));
    EXPECT_EQ(p.to_string(), "[0,1,-2,3]");
    EXPECT_EQ(ProjPoint(p.coords()), p);
    EXPECT_EQ((ProjPoint{3, 0, 0}), (ProjPoint{-1, 0, 0}));
    EXPECT_THROW((ProjPoint{0, 0, 0}), InvalidInput);
    const RatVec half = {Rat(1, 2), Rat(-1, 3)};
    EXPECT_EQ(ProjPoint(std::span<const Rat>(half)), (ProjPoint{3, -2}));
}

TEST(Incidence, CoordinateHyperplaneIsLine) {
    const ProjSubspace l = coordinate_subspace({0}, 2);
    EXPECT_EQ(l.ambient_dim(), 2u);
    EXPECT_EQ(l.projective_dim(), 1u);
    EXPECT_TRUE(l.contains(ProjPoint{0, 1, 5}));
    EXPECT_FALSE(l.contains(ProjPoint{1, 0, 0}));
    EXPECT_EQ(l.equations().rows(), 1u);
}

TEST(Incidence, SpanIgnoresDependentRowsAndIsCanonical) {
    const ProjSubspace a = ProjSubspace::span(std::vector<IntVec>{to_int_vec({1, 1, 0}), to_int_vec({0, 1, 1}),
                                                                  to_int_vec({1, 2, 1})});
    const ProjSubspace b = ProjSubspace::span(std::vector<IntVec>{to_int_vec({1, 0, -1}), to_int_vec({2, 3, 1})});
    EXPECT_EQ(a.projective_dim(), 1u);
    EXPECT_EQ(a, b);
    EXPECT_EQ(ProjSubspace::span(a.basis()), a);
    EXPECT_THROW(ProjSubspace::span(std::vector<IntVec>{to_int_vec({0, 0})}), InvalidInput);
}

TEST(Incidence, EmptyEquationSystemIsRejected) {
    std::vector<RatVec> forms;
    for (std::size_t i = 0; i < 3; ++i) {
        RatVec f(3);
        f[i] = 1;
        forms.push_back(f);
    }
    EXPECT_THROW(subspace_from_equations(forms, 2), InvalidInput);
    EXPECT_THROW(subspace_from_equations({RatVec(2)}, 2), UsageError);
}

TEST(Incidence, PrintedSigmaIsPlane) {
    const ProjSubspace s = printed_sigma();
    EXPECT_EQ(s.projective_dim(), 2u);
    for (const RatVec& f : printed_sigma_equations())
        for (const IntVec& b : s.integer_basis()) {
            Rat v = 0;
            for (std::size_t i = 0; i < 6; ++i) v += f[i] * b[i];
            EXPECT_EQ(v, 0);
        }
}

TEST(Incidence, SigmaMeetsSpecialPlanes) {
    const ProjSubspace s = printed_sigma();
    const auto t = special_planes();
    const auto m1 = intersect(s, t[0]);
    ASSERT_TRUE(m1);
    ASSERT_EQ(m1->projective_dim(), 0u);
    EXPECT_EQ(*m1->as_point(), (ProjPoint{0, 0, 1, 0, -1, 0}));
    const auto m2 = intersect(s, t[1]);
    ASSERT_TRUE(m2 && m2->as_point());
    EXPECT_EQ(*m2->as_point(), (ProjPoint{0, 1, 0, -1, 0, 1}));
    EXPECT_FALSE(intersect(s, t[2]).has_value());
    EXPECT_EQ(intersection_dim(s, t[2]), -1);
    const auto m4 = intersect(s, t[3]);
    ASSERT_TRUE(m4 && m4->as_point());
    EXPECT_EQ(*m4->as_point(), (ProjPoint{1, 0, 0, -1, 0, 0}));
}

TEST(Incidence, PrintedPointsSpanThreeSpace) {
    const auto pts = printed_points();
    std::vector<IntVec> rows;
    for (const ProjPoint& p : pts) rows.push_back(p.coords());
    EXPECT_EQ(rank_of_rows(rows, 6), 4u);
    EXPECT_FALSE(printed_sigma().contains(pts[2]));
    const PositionResult r = general_position_on_plane(pts, printed_sigma());
    EXPECT_EQ(r.verdict, PositionVerdict::Inapplicable);
    EXPECT_NE(r.detail.find("P3"), std::string::npos);
}

TEST(Incidence, SpecialPlanesPairwiseMeetInPoints) {
    const auto t = special_planes();
    const auto q12 = intersect(t[0], t[1]);
    ASSERT_TRUE(q12 && q12->as_point());
    EXPECT_EQ(*q12->as_point(), (ProjPoint{0, 1, 0, 0, 0, 0}));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) {
                EXPECT_LE(intersection_dim(t[i], t[j]), 0);
            }
}

TEST(Incidence, IntersectionIsSymmetricAndBounded) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-2, 2);
    auto random_subspace = [&](std::size_t k) {
        for (;;) {
            std::vector<IntVec> rows(k, IntVec(5));
            for (IntVec& r : rows)
                for (Int& x : r) x = c(rng);
            if (rank_of_rows(rows, 5) == k) return ProjSubspace::span(rows);
        }
    };
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t ka = 1 + static_cast<std::size_t>(trial % 4), kb = 1 + static_cast<std::size_t>(trial / 4 % 4);
        const ProjSubspace a = random_subspace(ka), b = random_subspace(kb);
        const long ab = intersection_dim(a, b);
        EXPECT_EQ(ab, intersection_dim(b, a));
        // dim(A ∩ B) >= dim A + dim B - dim of ambient, as vector spaces.
        EXPECT_GE(ab + 1, static_cast<long>(ka + kb) - 5);
        EXPECT_LE(ab + 1, static_cast<long>(std::min(ka, kb)));
        if (const auto m = intersect(a, b)) {
            EXPECT_TRUE(a.contains(*m));
            EXPECT_TRUE(b.contains(*m));
        }
    }
}

TEST(Incidence, GeneralPositionVerdicts) {
    const ProjSubspace plane = coordinate_subspace({3, 4, 5}, 5);
    const std::array<ProjPoint, 4> frame = {ProjPoint{1, 0, 0, 0, 0, 0}, ProjPoint{0, 1, 0, 0, 0, 0},
                                            ProjPoint{0, 0, 1, 0, 0, 0}, ProjPoint{1, 1, 1, 0, 0, 0}};
    EXPECT_EQ(general_position_on_plane(frame, plane).verdict, PositionVerdict::General);
    const std::array<ProjPoint, 4> collinear = {ProjPoint{1, 0, 0, 0, 0, 0}, ProjPoint{0, 1, 0, 0, 0, 0},
                                                ProjPoint{1, 1, 0, 0, 0, 0}, ProjPoint{0, 0, 1, 0, 0, 0}};
    const PositionResult r = general_position_on_plane(collinear, plane);
    EXPECT_EQ(r.verdict, PositionVerdict::Special);
    EXPECT_NE(r.detail.find("collinear"), std::string::npos);
    EXPECT_THROW(general_position_on_plane(frame, coordinate_subspace({2, 3, 4, 5}, 5)), UsageError);
    EXPECT_STREQ(to_string(PositionVerdict::Inapplicable), "inapplicable");
}

TEST(Incidence, TransversalPlaneIsVerifiedAndDeterministic) {
    const auto targets = special_planes();
    const TransversalResult a = find_transversal_plane(targets, 1, 100);
    const TransversalResult b = find_transversal_plane(targets, 1, 100);
    EXPECT_EQ(a.plane, b.plane);
    EXPECT_EQ(a.attempts, b.attempts);
    EXPECT_EQ(a.seed, 1u);
    EXPECT_TRUE(check_transversal(a.plane, targets).all());
    const oracle::TransversalReplay replay = oracle::replay_transversal(a.plane.integer_basis(), oracle::special_plane_zeros());
    EXPECT_TRUE(replay.all());
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_TRUE(targets[i].contains(a.points[i]));
        EXPECT_TRUE(a.plane.contains(a.points[i]));
    }
}

TEST(Incidence, TransversalPlanesOverManySeedsPassOracle) {
    const auto targets = special_planes();
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const TransversalResult t = find_transversal_plane(targets, seed, 100);
        EXPECT_TRUE(oracle::replay_transversal(t.plane.integer_basis(), oracle::special_plane_zeros()).all())
            << "seed " << seed;
    }
}

TEST(Incidence, SearchExhaustionReportsAttempts) {
    try {
        find_transversal_plane(special_planes(), 1, 0);
        FAIL() << "expected SearchExhausted";
    } catch (const SearchExhausted& e) {
        EXPECT_EQ(e.attempts(), 0u);
    }
}

TEST(Incidence, DegenerateTargetsAreRejected) {
    auto t = special_planes();
    t[3] = t[2];
    EXPECT_THROW(find_transversal_plane(t, 1, 10), InvalidInput);
    auto lines = special_planes();
    lines[0] = coordinate_subspace({0, 1, 3, 5}, 5);
    EXPECT_THROW(find_transversal_plane(lines, 1, 10), UsageError);
}

TEST(Incidence, CheckTransversalRejectsTargetPlaneItself) {
    const auto targets = special_planes();
    const TransversalCheck c = check_transversal(targets[0], targets);
    EXPECT_FALSE(c.all());
    EXPECT_FALSE(c.meets_each_in_point);
}

TEST(Incidence, WitnessPlaneMeetsAllButFailsRefinement) {
    const WitnessPlane w = witness_plane_via_line(special_planes(), 1);
    EXPECT_TRUE(w.meets_all);
    EXPECT_FALSE(w.refinement_holds);
    EXPECT_EQ(w.q12, (ProjPoint{0, 1, 0, 0, 0, 0}));
    EXPECT_EQ(w.q34, (ProjPoint{1, 0, 0, 0, 0, 0}));
    EXPECT_TRUE(w.plane.contains(w.q12));
    EXPECT_TRUE(w.plane.contains(w.q34));
    EXPECT_EQ(w.plane.projective_dim(), 2u);
}

TEST(Incidence, WitnessRejectsCollapsingTargets) {
    auto t = special_planes();
    // Make T3 ∩ T4 coincide with T1 ∩ T2 = [0,1,0,0,0,0].
    t[2] = coordinate_subspace({0, 2, 3}, 5);
    t[3] = coordinate_subspace({0, 4, 5}, 5);
    EXPECT_THROW(witness_plane_via_line(t, 1), InvalidInput);
}

TEST(Incidence, HyperplaneContainments) {
    const auto t = special_planes();
    EXPECT_EQ(targets_in_hyperplane(t, 0), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(targets_in_hyperplane(t, 1), (std::vector<std::size_t>{3, 4}));
    EXPECT_EQ(targets_in_hyperplane(t, 2), (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(targets_in_hyperplane(t, 3), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(targets_in_hyperplane(t, 4), (std::vector<std::size_t>{2, 4}));
    EXPECT_EQ(targets_in_hyperplane(t, 5), (std::vector<std::size_t>{1, 4}));
    // The listed containments use the same six pairs in another order.
    std::multiset<std::vector<std::size_t>> computed, printed;
    const auto listed = printed_hyperplane_containments();
    for (std::size_t i = 0; i < 6; ++i) {
        computed.insert(targets_in_hyperplane(t, i));
        printed.insert(listed[i]);
    }
    EXPECT_EQ(computed, printed);
}
