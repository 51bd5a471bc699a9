#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace toric;

namespace {

Exponent ex(std::initializer_list<long> v) { return Exponent(v.begin(), v.end()); }

}  // namespace

TEST(Support, OrderingAndComplement) {
    EXPECT_LT(Support({3}), Support({1, 2}));
    EXPECT_LT(Support({1, 2}), Support({1, 3}));
    EXPECT_EQ(Support({2, 4}).complement(4), Support({1, 3}));
    EXPECT_THROW(Support({0, 1}), UsageError);
}

TEST(Monomials, StarsAndBars) {
    EXPECT_EQ(monomials_of_degree(projective_space(2), to_int_vec({2})).size(), 6u);
}

TEST(Monomials, P1xP1Bidegree) {
    const auto ms = monomials_of_degree(p1xp1(), to_int_vec({1, 1}));
    const std::vector<Exponent> expected = {ex({0, 1, 0, 1}), ex({0, 1, 1, 0}), ex({1, 0, 0, 1}), ex({1, 0, 1, 0})};
    EXPECT_EQ(ms, expected);
}

TEST(Monomials, ZeroDegreeOnDelPezzo) {
    const auto ms = monomials_of_degree(delpezzo4().degrees, Multidegree(5));
    ASSERT_EQ(ms.size(), 1u);
    EXPECT_EQ(ms[0], Exponent(10));
}

TEST(Monomials, DelPezzoAmpleCountMatchesDynamicProgramming) {
    const DelPezzo4 dp = delpezzo4();
    const auto ms = monomials_of_degree(dp.degrees, dp.ample_class);
    EXPECT_EQ(ms.size(), 2038u);
    EXPECT_TRUE(oracle::all_valid_and_distinct(dp.degrees, dp.ample_class, ms));
    EXPECT_EQ(ms.size(), oracle::count_monomials(dp.degrees, dp.ample_class, dp.heft));
    const Multidegree d2 = scaled(dp.ample_class, 2);
    const auto ms2 = monomials_of_degree(dp.degrees, d2);
    EXPECT_TRUE(oracle::all_valid_and_distinct(dp.degrees, d2, ms2));
    EXPECT_EQ(ms2.size(), oracle::count_monomials(dp.degrees, d2, dp.heft));
}

TEST(Monomials, RandomGradingsMatchBruteForce) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 50; ++t) {
        const std::size_t r = 1 + rng() % 2, n = r + 1 + rng() % 3;
        const DegreeMatrix q = oracle::random_grading(rng, r, n);
        Multidegree d(r);
        for (Int& x : d) x = static_cast<long>(rng() % 7) - 2;
        EXPECT_EQ(monomials_of_degree(q, d), oracle::brute_force_monomials(q, d, *q.heft())) << "trial " << t;
    }
}

TEST(Monomials, DerivedHeftWorks) {
    const DegreeMatrix q({to_int_vec({1, 0}), to_int_vec({1, 1}), to_int_vec({0, 1})}, {});
    const auto h = derive_heft(q);
    ASSERT_TRUE(h);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_GT(dot_int(*h, q.column(k)), 0);
    EXPECT_EQ(monomials_of_degree(q, to_int_vec({1, 1})).size(), 2u);
}

TEST(Monomials, Errors) {
    const DegreeMatrix neg({to_int_vec({1}), to_int_vec({-1})}, {});
    try {
        monomials_of_degree(neg, to_int_vec({0}));
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_STREQ(e.what(), "grading not positive");
    }
    EXPECT_THROW(monomials_of_degree(projective_space(2), to_int_vec({1, 1})), UsageError);
}

TEST(Radical, SmallCases) {
    EXPECT_EQ(radical_of_monomials({ex({2, 1}), ex({1, 2})}), SquarefreeIdeal({Support{1, 2}}));
    EXPECT_EQ(radical_of_monomials({ex({2, 0}), ex({0, 3})}), SquarefreeIdeal({Support{1}, Support{2}}));
    EXPECT_TRUE(radical_of_monomials({}).empty());
}

TEST(Radical, ProjectivePlaneIrrelevant) {
    const IrrelevantResult r = irrelevant_radical(projective_space(2), to_int_vec({1}));
    EXPECT_EQ(r.ideal, SquarefreeIdeal({Support{1}, Support{2}, Support{3}}));
}

TEST(Radical, DelPezzoAmple) {
    const DelPezzo4 dp = delpezzo4();
    IrrelevantOptions opt;
    opt.check_stability = true;
    const IrrelevantResult r = irrelevant_radical(dp.degrees, dp.ample_class, opt);
    EXPECT_EQ(r.ideal.size(), 42u);
    for (const Support& s : r.ideal.generators()) EXPECT_EQ(s.size(), 5u);
    EXPECT_TRUE(r.ideal.is_antichain());
    ASSERT_TRUE(r.stable);
    EXPECT_TRUE(*r.stable);
    EXPECT_TRUE(r.warnings.empty());
}

TEST(Radical, DelPezzoAnticanonicalMatchesListedIdeal) {
    const DelPezzo4 dp = delpezzo4();
    const IrrelevantResult r = irrelevant_radical(dp.degrees, dp.anticanonical);
    EXPECT_EQ(oracle::as_sets(r.ideal), oracle::printed_anticanonical_supports());
    EXPECT_TRUE(r.ideal.contains(Support{1, 2, 3, 7}));
    EXPECT_TRUE(r.ideal.contains(Support{1, 4, 5, 8}));
    EXPECT_TRUE(r.ideal.contains(Support{1, 3, 4, 7, 8}));
}

TEST(Radical, InstabilityIsReported) {
    // P(1,2): degree 1 only sees x1, degree 2 adds x2 as its own generator.
    const DegreeMatrix q({to_int_vec({1}), to_int_vec({2})}, {});
    IrrelevantOptions opt;
    opt.check_stability = true;
    const IrrelevantResult r = irrelevant_radical(q, to_int_vec({1}), opt);
    EXPECT_EQ(r.ideal, SquarefreeIdeal({Support{1}}));
    ASSERT_TRUE(r.stable);
    EXPECT_FALSE(*r.stable);
    EXPECT_EQ(r.warnings.size(), 1u);
    opt.saturation_depth = 2;
    EXPECT_EQ(irrelevant_radical(q, to_int_vec({1}), opt).ideal, SquarefreeIdeal({Support{1}, Support{2}}));
}

TEST(Radical, MonotoneUnderMultiples) {
    const DelPezzo4 dp = delpezzo4();
    IrrelevantOptions opt;
    opt.saturation_depth = 2;
    const SquarefreeIdeal combined = irrelevant_radical(dp.degrees, dp.anticanonical, opt).ideal;
    for (long j : {1, 2})
        for (const Exponent& e : monomials_of_degree(dp.degrees, scaled(dp.anticanonical, j)))
            EXPECT_TRUE(combined.contains(Support::of(e)));
}

TEST(Radical, AntichainsOnRandomGradings) {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 30; ++t) {
        const DegreeMatrix q = oracle::random_grading(rng, 2, 4);
        Multidegree d(2);
        for (Int& x : d) x = static_cast<long>(rng() % 5);
        const auto ms = monomials_of_degree(q, d);
        const SquarefreeIdeal b = radical_of_monomials(ms);
        EXPECT_TRUE(b.is_antichain());
        EXPECT_EQ(oracle::as_sets(b), oracle::minimal_supports(ms));
        IrrelevantOptions opt;
        opt.heft = q.heft();
        EXPECT_EQ(irrelevant_radical(q, d, opt).ideal, b);
    }
}
