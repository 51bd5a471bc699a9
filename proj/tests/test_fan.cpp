#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace toric;

namespace {

Fan fan_for(const DegreeMatrix& q, const Multidegree& d) {
    return fan_from_irrelevant(gale_dual(q), irrelevant_radical(q, d).ideal);
}

std::vector<Support> cone_supports(const Fan& f) {
    std::vector<Support> out;
    for (const Cone& c : f.maximal_cones()) out.push_back(c.rays);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Fan, ProjectivePlane) {
    const Fan f = fan_for(projective_space(2), to_int_vec({1}));
    EXPECT_EQ(cone_supports(f), (std::vector<Support>{{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_TRUE(validate_fan(f).ok);
    EXPECT_TRUE(is_simplicial(f).ok);
    EXPECT_TRUE(is_complete(f).ok);
    const ProjectivityResult p = is_projective(f);
    EXPECT_TRUE(p.projective);
    EXPECT_TRUE(verify_support_function(f, p.support_function));
}

TEST(Fan, P1xP1OneRayPerFactor) {
    const Fan f = fan_for(p1xp1(), to_int_vec({1, 1}));
    ASSERT_EQ(f.num_maximal_cones(), 4u);
    for (const Cone& c : f.maximal_cones()) {
        EXPECT_EQ(c.rays.size(), 2u);
        EXPECT_TRUE(c.rays.contains(1) != c.rays.contains(2));
        EXPECT_TRUE(c.rays.contains(3) != c.rays.contains(4));
    }
    EXPECT_TRUE(validate_fan(f).ok && is_complete(f).ok && is_projective(f).projective);
}

TEST(Fan, OverlappingConesAreInvalid) {
    const Fan f({to_int_vec({1, 0}), to_int_vec({0, 1}), to_int_vec({1, 1}), to_int_vec({-1, 1})},
                {Cone{Support{1, 2}, 2}, Cone{Support{3, 4}, 2}}, 2);
    const Verdict v = validate_fan(f);
    EXPECT_FALSE(v.ok);
    EXPECT_FALSE(v.reason.empty());
}

TEST(Fan, SingleQuadrantIsIncomplete) {
    const Fan f({to_int_vec({1, 0}), to_int_vec({0, 1})}, {Cone{Support{1, 2}, 2}}, 2);
    EXPECT_TRUE(validate_fan(f).ok);
    EXPECT_FALSE(is_complete(f).ok);
}

TEST(Fan, NotStronglyConvexRejected) {
    const GaleDual g{IntMat{{1, 0}, {-1, 0}, {0, 1}}};
    EXPECT_THROW(fan_from_irrelevant(g, SquarefreeIdeal({Support{3}})), InvalidInput);
}

TEST(Fan, DelPezzoAmple) {
    const DelPezzo4 dp = delpezzo4();
    const Fan f = fan_for(dp.degrees, dp.ample_class);
    EXPECT_EQ(f.num_maximal_cones(), 42u);
    for (std::size_t c = 0; c < f.num_maximal_cones(); ++c) {
        ASSERT_EQ(f.cone_rays(c).size(), 5u);
        EXPECT_NE(determinant(IntMat::from_rows(f.cone_rays(c))), 0);
    }
    EXPECT_TRUE(validate_fan(f).ok);
    EXPECT_TRUE(is_simplicial(f).ok);
    EXPECT_TRUE(is_complete(f).ok);
    const ProjectivityResult p = is_projective(f);
    ASSERT_TRUE(p.projective);
    EXPECT_TRUE(verify_support_function(f, p.support_function));
}

TEST(Fan, DelPezzoAnticanonical) {
    const DelPezzo4 dp = delpezzo4();
    const Fan f = fan_for(dp.degrees, dp.anticanonical);
    EXPECT_EQ(f.num_maximal_cones(), 22u);
    EXPECT_TRUE(validate_fan(f).ok);
    const Verdict s = is_simplicial(f);
    EXPECT_FALSE(s.ok);
    EXPECT_TRUE(is_complete(f).ok);
    EXPECT_TRUE(is_projective(f).projective);
    std::size_t six_ray = 0;
    for (const Cone& c : f.maximal_cones()) six_ray += c.rays.size() == 6;
    EXPECT_GT(six_ray, 0u);
}

TEST(Fan, FacetPairingCountsTwo) {
    const DelPezzo4 dp = delpezzo4();
    for (const Multidegree& d : {dp.ample_class, dp.anticanonical})
        for (const auto& [facet, owners] : facet_pairing(fan_for(dp.degrees, d)).owners) EXPECT_EQ(owners.size(), 2u);
}

TEST(Fan, RayShootingAgreesWithFacetPairing) {
    const DelPezzo4 dp = delpezzo4();
    std::vector<Fan> fans = {fan_for(projective_space(2), to_int_vec({1})), fan_for(p1xp1(), to_int_vec({1, 1})),
                             fan_for(dp.degrees, dp.ample_class), fan_for(dp.degrees, dp.anticanonical)};
    for (const Fan& f : fans) {
        const bool complete = is_complete(f).ok;
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
            EXPECT_EQ(direction_covered_once(f, generic_direction(f.dim(), seed)), complete);
    }
    const Fan quadrant({to_int_vec({1, 0}), to_int_vec({0, 1})}, {Cone{Support{1, 2}, 2}}, 2);
    EXPECT_FALSE(direction_covered_once(quadrant, to_int_vec({-3, -5})));
}

TEST(Fan, VerdictsInvariantUnderConePermutation) {
    const DelPezzo4 dp = delpezzo4();
    const Fan f = fan_for(dp.degrees, dp.anticanonical);
    std::vector<std::size_t> order(f.num_maximal_cones());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(8);
    std::shuffle(order.begin(), order.end(), rng);
    const Fan g = f.permuted(order);
    EXPECT_EQ(validate_fan(g).ok, validate_fan(f).ok);
    EXPECT_EQ(is_simplicial(g).ok, is_simplicial(f).ok);
    EXPECT_EQ(is_complete(g).ok, is_complete(f).ok);
    EXPECT_EQ(is_projective(g).projective, is_projective(f).projective);
}

namespace {

// Complete fan in R^3: the cone from -(1,1,1) over the edges of the simplex,
// plus cones over a triangulation of the face x+y+z>0 with an inner triangle
// and three split quadrilaterals.
Fan triangulated_face_fan(const std::vector<Support>& annulus) {
    const std::vector<IntVec> rays = {to_int_vec({-1, -1, -1}), to_int_vec({1, 0, 0}), to_int_vec({0, 1, 0}),
                                      to_int_vec({0, 0, 1}),    to_int_vec({2, 1, 1}), to_int_vec({1, 2, 1}),
                                      to_int_vec({1, 1, 2})};
    std::vector<Cone> cones = {{Support{5, 6, 7}, 3}, {Support{1, 2, 3}, 3}, {Support{1, 3, 4}, 3}, {Support{1, 2, 4}, 3}};
    for (const Support& s : annulus) cones.push_back({s, 3});
    return Fan(rays, cones, 3);
}

}  // namespace

TEST(Fan, RotationalTriangulationIsNotProjective) {
    // Every quadrilateral split along the diagonal turning the same way.
    const Fan f = triangulated_face_fan({{2, 3, 6}, {2, 6, 5}, {3, 4, 7}, {3, 7, 6}, {4, 2, 5}, {4, 5, 7}});
    ASSERT_TRUE(validate_fan(f).ok) << validate_fan(f).reason;
    ASSERT_TRUE(is_complete(f).ok) << is_complete(f).reason;
    EXPECT_TRUE(is_simplicial(f).ok);
    const ProjectivityResult p = is_projective(f);
    EXPECT_FALSE(p.projective);
    EXPECT_FALSE(p.reason.empty());
}

TEST(Fan, NonRotationalTriangulationIsProjective) {
    const Fan f = triangulated_face_fan({{2, 3, 6}, {2, 6, 5}, {3, 4, 6}, {4, 7, 6}, {4, 2, 5}, {4, 5, 7}});
    ASSERT_TRUE(validate_fan(f).ok) << validate_fan(f).reason;
    ASSERT_TRUE(is_complete(f).ok) << is_complete(f).reason;
    const ProjectivityResult p = is_projective(f);
    ASSERT_TRUE(p.projective);
    EXPECT_TRUE(verify_support_function(f, p.support_function));
}
