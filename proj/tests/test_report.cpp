#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toric/report.hpp"

using namespace toric;

namespace {

const RunReport& default_run() {
    static const RunReport r = reproduce_example();
    return r;
}

}  // namespace

TEST(Report, DefaultRunPasses) {
    const RunReport& r = default_run();
    EXPECT_TRUE(r.overall());
    EXPECT_EQ(r.exit_code(), 0);
    EXPECT_EQ(r.first_failure(), nullptr);
    for (const char* name : {"gale-hermite", "ample-radical", "ample-fan", "anticanonical-radical", "anticanonical-fan",
                             "effective-cone-interior", "chamber-of-ample", "chamber-D-vs-2D", "chamber-D-vs-minusK",
                             "restriction-table", "embedding-report", "sigma-meets-Sigma1", "sigma-meets-Sigma2",
                             "sigma-meets-Sigma4", "sigma-meets-Sigma3-empty", "witness-plane-via-line",
                             "transversal-plane"}) {
        const CheckRecord* c = r.find(name);
        ASSERT_NE(c, nullptr) << name;
        EXPECT_TRUE(c->pass) << name << ": " << c->computed.dump();
        EXPECT_FALSE(c->informational) << name;
    }
}

TEST(Report, PrintedDataDiscrepanciesAreInformational) {
    const RunReport& r = default_run();
    for (const char* name : {"printed-P3-on-sigma", "printed-points-span", "printed-points-general-position",
                             "hyperplane-containments"}) {
        const CheckRecord* c = r.find(name);
        ASSERT_NE(c, nullptr) << name;
        EXPECT_TRUE(c->informational);
        EXPECT_FALSE(c->pass);
        EXPECT_EQ(c->verdict_label, kInconsistent);
    }
    EXPECT_EQ(r.find("printed-points-span")->computed, 4);
    EXPECT_EQ(r.find("hyperplane-containments")->computed["samePairs"], true);
}

TEST(Report, JsonShape) {
    const Json j = default_run().to_json();
    EXPECT_EQ(j["overall"], true);
    EXPECT_FALSE(j.contains("firstFailure"));
    EXPECT_EQ(j["dataset"], "delpezzo4");
    ASSERT_TRUE(j["checks"].is_array());
    for (const Json& c : j["checks"]) {
        const std::string origin = c["expected"]["provenance"].get<std::string>();
        EXPECT_TRUE(origin == detail::kTagPublished || origin == detail::kTagDerived) << c["name"];
        EXPECT_TRUE(c.contains("computed"));
        EXPECT_TRUE(c["verdict"].is_string());
    }
    EXPECT_FALSE(j["notes"].empty());
}

TEST(Report, OutputIsByteStable) {
    const std::string a = default_run().to_json().dump(2);
    const std::string b = reproduce_example().to_json().dump(2);
    EXPECT_EQ(a, b);
}

TEST(Report, DeeperSaturationGivesSameVerdicts) {
    ReproduceOptions opt;
    opt.saturate = 2;
    const RunReport deep = reproduce_example(opt);
    const RunReport& base = default_run();
    ASSERT_EQ(deep.checks.size(), base.checks.size());
    for (std::size_t i = 0; i < deep.checks.size(); ++i) {
        EXPECT_EQ(deep.checks[i].name, base.checks[i].name);
        EXPECT_EQ(deep.checks[i].pass, base.checks[i].pass) << deep.checks[i].name;
    }
}

TEST(Report, CorruptedGradingFailsFirstCheck) {
    DelPezzo4 dp = delpezzo4();
    std::vector<Multidegree> cols = dp.degrees.columns();
    std::swap(cols[0][1], cols[0][2]);
    cols[0][0] = 2;
    dp.degrees = DegreeMatrix(cols, dp.degrees.labels(), dp.heft);
    ReproduceOptions opt;
    opt.dataset = dp;
    const RunReport r = reproduce_example(opt);
    EXPECT_FALSE(r.overall());
    EXPECT_EQ(r.exit_code(), 1);
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_EQ(r.first_failure()->name, "gale-hermite");
    const Json j = r.to_json();
    EXPECT_EQ(j["firstFailure"], "gale-hermite");
    EXPECT_EQ(j["overall"], false);
}

TEST(Report, WrongAmpleClassFailsRadicalCheck) {
    DelPezzo4 dp = delpezzo4();
    dp.ample_class = dp.anticanonical;
    ReproduceOptions opt;
    opt.dataset = dp;
    const RunReport r = reproduce_example(opt);
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_EQ(r.first_failure()->name, "ample-radical");
    EXPECT_EQ(r.find("ample-radical")->computed["supports"], 22);
}

TEST(Report, PrintedAnticanonicalIdealMatchesTranscription) {
    EXPECT_EQ(printed_anticanonical_monomials().size(), 22u);
    EXPECT_EQ(oracle::as_sets(printed_anticanonical_ideal()), oracle::printed_anticanonical_supports());
    const std::vector<std::string> names = {"a", "b", "c"};
    EXPECT_EQ(parse_monomial("a*c", names), (Support{1, 3}));
    EXPECT_THROW(parse_monomial("a*q", names), InvalidInput);
}

TEST(Report, FanJsonForProjectivePlane) {
    const DegreeMatrix q = projective_space(2);
    const Fan f = fan_from_irrelevant(gale_dual(q), irrelevant_radical(q, to_int_vec({1})).ideal);
    const FanCertificate cert = certify_fan(f);
    const Json j = fan_json(f, cert);
    EXPECT_EQ(j["rays"].size(), 3u);
    EXPECT_EQ(j["cones"].size(), 3u);
    EXPECT_EQ(cert.num_cones, 3u);
    EXPECT_TRUE(cert.projective.projective);
    EXPECT_TRUE(cert.witness_replayed);
}
