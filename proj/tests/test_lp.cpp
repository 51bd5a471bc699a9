#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace toric;

TEST(Lp, EmptySystemIsFeasibleAtZero) {
    const LpResult r = lp_feasible(LinearSystem(1));
    ASSERT_TRUE(r.feasible);
    ASSERT_EQ(r.witness.size(), 1u);
    EXPECT_EQ(r.witness[0], 0);
}

TEST(Lp, ContradictoryBounds) {
    LinearSystem s(1);
    s.add_ge({1}, 1);    // x >= 1
    s.add_ge({-1}, 0);   // x <= 0
    EXPECT_FALSE(lp_feasible(s).feasible);
}

TEST(Lp, StrictRowsAreStrict) {
    LinearSystem s(1);
    s.add_gt({1}, 0);
    s.add_gt({-1}, -1);   // 0 < x < 1
    const LpResult r = lp_feasible(s);
    ASSERT_TRUE(r.feasible);
    EXPECT_GT(r.witness[0], 0);
    EXPECT_LT(r.witness[0], 1);

    LinearSystem t(1);
    t.add_gt({1}, 0);
    t.add_ge({-1}, 0);   // x > 0 and x <= 0
    EXPECT_FALSE(lp_feasible(t).feasible);
}

TEST(Lp, Equalities) {
    LinearSystem s(2);
    s.add_eq({1, 1}, 3);
    s.add_eq({1, -1}, 1);
    const LpResult r = lp_feasible(s);
    ASSERT_TRUE(r.feasible);
    EXPECT_EQ(r.witness, (RatVec{2, 1}));
    s.add_gt({0, 1}, 1);   // y > 1 contradicts y = 1
    EXPECT_FALSE(lp_feasible(s).feasible);
}

TEST(Lp, WrongDimensionIsUsageError) {
    LinearSystem s(2);
    EXPECT_THROW(s.add_ge({1}, 0), UsageError);
}

TEST(Lp, P2SupportFunctionSystem) {
    // Hand-built support function for the P^2 fan: m = (0,0), (-1,0)... verified by substitution,
    // then compared with the LP verdict on the same system.
    const Fan f = fan_from_irrelevant(gale_dual(projective_space(2)),
                                      SquarefreeIdeal({Support{1}, Support{2}, Support{3}}));
    const ProjectivityResult p = is_projective(f);
    ASSERT_TRUE(p.projective);
    EXPECT_TRUE(verify_support_function(f, p.support_function));
}

TEST(Lp, AgreesWithFourierMotzkinAndReplays) {
    std::mt19937_64 rng(99);
    int feasible = 0;
    for (int t = 0; t < 400; ++t) {
        const LinearSystem s = oracle::random_system(rng, 1 + rng() % 3, 1 + rng() % 6);
        const LpResult r = lp_feasible(s);
        EXPECT_EQ(r.feasible, oracle::fourier_motzkin_feasible(s));
        if (r.feasible) {
            ++feasible;
            EXPECT_TRUE(s.satisfied_by(r.witness));
        }
    }
    EXPECT_GT(feasible, 50);
    EXPECT_LT(feasible, 400);
}
