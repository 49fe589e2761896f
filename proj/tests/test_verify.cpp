#include <gtest/gtest.h>

#include <cauchydet/verify.hpp>

using namespace cauchydet;

namespace {

Perturbation u15() {
    Perturbation p;
    p.u_power_base = 15;
    return p;
}

TEST(VerifyLuProduct, SymbolicPasses) {
    const auto r = verify_lu_product(2, Mode::symbolic);
    EXPECT_TRUE(r.passed);
    EXPECT_FALSE(r.skipped);
    EXPECT_FALSE(r.counterexample);
    EXPECT_EQ(r.suite, "lu_product");
}

TEST(VerifyLuProduct, NumericAtTOne) {
    const auto r = verify_lu_product(1, Mode::numeric, SampleSet{{Rational(1)}, {}});
    EXPECT_TRUE(r.passed);
    ASSERT_EQ(r.t_samples.size(), 1u);
    EXPECT_EQ(r.t_samples[0], Rational(1));
}

TEST(VerifyLuProduct, FaultInjectionCaughtAtTwo) {
    const auto r = verify_lu_product(4, Mode::symbolic, {}, u15());
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->indices.front(), (std::pair<std::string, long>{"s", 2}));
    EXPECT_NE(r.counterexample->lhs, r.counterexample->rhs);

    const auto n = verify_lu_product(3, Mode::numeric, draw_t_samples(3, 3, 1), u15());
    EXPECT_FALSE(n.passed);
    ASSERT_TRUE(n.counterexample);
    EXPECT_TRUE(n.counterexample->t.has_value());
}

TEST(VerifyLuProduct, SingularSampleIsDiscarded) {
    const auto r = verify_lu_product(2, Mode::numeric, SampleSet{{Rational(BigInt(2), BigInt(3)), Rational(1)}, {}});
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.t_samples, std::vector<Rational>{Rational(1)});
    EXPECT_EQ(r.discarded_samples, std::vector<Rational>{Rational(BigInt(2), BigInt(3))});

    const auto none = verify_lu_product(2, Mode::numeric, SampleSet{{Rational(2)}, {}});
    EXPECT_FALSE(none.passed);
    EXPECT_TRUE(none.error);
}

TEST(VerifyFactorsMatch, SymbolicAndFault) {
    EXPECT_TRUE(verify_factors_match(2, Mode::symbolic).passed);
    EXPECT_TRUE(verify_factors_match(6, Mode::symbolic).passed);
    const auto bad = verify_factors_match(3, Mode::symbolic, {}, u15());
    EXPECT_FALSE(bad.passed);
    ASSERT_TRUE(bad.counterexample);
    EXPECT_EQ(bad.counterexample->label, "U");
}

TEST(VerifyFactorsMatch, NumericRecordsDiscards) {
    const auto samples = draw_t_samples(5, 6, 9);
    const auto r = verify_factors_match(6, Mode::numeric, samples);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.t_samples, samples.accepted);
    EXPECT_EQ(r.discarded_samples, samples.discarded);
}

TEST(Sampler, RejectsSingularValuesDeterministically) {
    const auto a = draw_t_samples(20, 10, 42);
    const auto b = draw_t_samples(20, 10, 42);
    EXPECT_EQ(a.accepted, b.accepted);
    EXPECT_EQ(a.discarded, b.discarded);
    for (const auto& t : a.accepted) {
        EXPECT_TRUE(is_generic_t(10, t));
        EXPECT_GE(t.num(), 1);
        EXPECT_LE(t.num(), 50);
        EXPECT_LE(t.den(), 50);
    }
    for (const auto& t : a.discarded)
        EXPECT_FALSE(is_generic_t(10, t));
}

TEST(Sampler, RetriesExhausted) {
    EXPECT_THROW(draw_t_samples(1, 7, [](const Rational&) { return false; }), RetriesExhausted);
}

TEST(VerifyGamma, PassesAndCatchesSignFlip) {
    EXPECT_TRUE(verify_gamma_identities(1, 1, 1).passed);
    EXPECT_TRUE(verify_gamma_identities(8, 8, 8).passed);
    Perturbation p;
    p.gamma_left_sign = false;
    const auto r = verify_gamma_identities(3, 3, 3, p);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->label, "left");
    EXPECT_EQ(r.counterexample->indices, (std::vector<std::pair<std::string, long>>{{"i", 1}, {"j", 1}}));
    EXPECT_EQ(r.counterexample->lhs, "(t^2 - 4)/(1)");
    EXPECT_EQ(r.counterexample->rhs, "(-t^2 + 4)/(1)");
}

TEST(VerifyChain, Passes) {
    EXPECT_TRUE(verify_chain(2).passed);
    EXPECT_TRUE(verify_chain(20).passed);
}

TEST(VerifyChain, E3FaultFailsAtOne) {
    Perturbation p;
    p.e3_power_base = 32;
    p.e3_power_offset = 0;
    const auto r = verify_chain(5, 12, p);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->indices.front().second, 1);
    EXPECT_EQ(r.counterexample->label, "E3 vs E1");
    EXPECT_EQ(r.counterexample->lhs, "32/3");
    EXPECT_EQ(r.counterexample->rhs, "1/3");
}

TEST(VerifyChain, PrintedConstantFailsAtTwo) {
    const auto r = verify_chain(5, 12, Perturbation::printed_line3());
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->indices.front().second, 2);
    EXPECT_EQ(r.counterexample->lhs, "4/525");
}

TEST(VerifyChain, UFaultReachesDeterminantCheck) {
    const auto r = verify_chain(3, 12, u15());
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(r.counterexample->label, "det_closed vs E6");
}

VerifyConfig small_config() {
    VerifyConfig cfg;
    cfg.s_max_symbolic = 3;
    cfg.s_max_numeric = 5;
    cfg.s_max_factors_numeric = 4;
    cfg.t_sample_count = 4;
    cfg.gamma_max = 3;
    cfg.chain_s_max = 6;
    return cfg;
}

TEST(RunAll, AllPassAndOrder) {
    const auto reports = run_all(small_config());
    ASSERT_EQ(reports.size(), 6u);
    EXPECT_TRUE(all_passed(reports));
    EXPECT_EQ(reports[0].suite, "lu_product");
    EXPECT_EQ(reports[0].mode, Mode::symbolic);
    EXPECT_EQ(reports[1].mode, Mode::numeric);
    EXPECT_EQ(reports[1].t_samples.size(), 4u);
    EXPECT_EQ(reports[4].suite, "gamma_identities");
    EXPECT_EQ(reports[5].suite, "chain");
}

TEST(RunAll, ZeroBoundMarksSkipped) {
    auto cfg = small_config();
    cfg.s_max_symbolic = 0;
    const auto reports = run_all(cfg);
    EXPECT_TRUE(reports[0].skipped);
    EXPECT_FALSE(reports[0].passed);
    EXPECT_TRUE(reports[2].skipped);
    EXPECT_FALSE(reports[1].skipped);
    EXPECT_TRUE(all_passed(reports));
}

TEST(RunAll, FailureDoesNotAbortOthers) {
    auto cfg = small_config();
    cfg.perturbation.gamma_left_sign = false;
    const auto reports = run_all(cfg);
    EXPECT_FALSE(all_passed(reports));
    for (const auto& r : reports)
        EXPECT_EQ(r.passed, r.suite != "gamma_identities") << r.suite;
}

TEST(RunAll, DeterministicJson) {
    auto cfg = small_config();
    cfg.seed = 42;
    auto dump = [&] {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : run_all(cfg))
            j.push_back(to_json(r));
        return j.dump();
    };
    EXPECT_EQ(dump(), dump());
    cfg.parallel = false;
    const auto sequential = dump();
    cfg.parallel = true;
    EXPECT_EQ(sequential, dump());
}

TEST(ReportJson, KeyOrderAndValues) {
    auto r = verify_chain(5, 12, Perturbation::printed_line3());
    const auto j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"suite", "mode", "range", "t_samples", "discarded_samples", "passed",
                                              "skipped", "counterexample", "error", "elapsed_ms"}));
    EXPECT_TRUE(j["elapsed_ms"].is_null());
    EXPECT_TRUE(to_json(r, true)["elapsed_ms"].is_number());
    EXPECT_EQ(j["counterexample"]["indices"]["s"], 2);
    EXPECT_EQ(j["counterexample"]["t"], "1");
}

} // namespace
