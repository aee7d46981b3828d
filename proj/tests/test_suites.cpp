#include "brickyard/suites.hpp"

#include <gtest/gtest.h>

using namespace brickyard;

TEST(Suites, RegistryIsComplete) {
    auto names = suite_names();
    EXPECT_EQ(names.size(), 20u);
    for (const char* required : {"a3-pairwise", "a4-counterexample", "d4-counterexample", "fullrank-smc", "oracle-hom"})
        EXPECT_NE(std::find(names.begin(), names.end(), required), names.end()) << required;
}

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesAtDefaultSize) {
    auto r = verify_suite(GetParam());
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    EXPECT_GT(r.checked, 0u);
}

INSTANTIATE_TEST_SUITE_P(All, EverySuite, ::testing::ValuesIn(suite_names()), [](const auto& info) {
    std::string s = info.param;
    for (auto& c : s)
        if (c == '-') c = '_';
    return s;
});

TEST(Suites, NamedExamples) {
    SuiteOptions o;
    o.n = 3;
    EXPECT_TRUE(verify_suite("A3-pairwise", o).pass);
    EXPECT_TRUE(verify_suite("fullrank-smc", o).pass);
    auto hom = verify_suite("oracle-hom", o);
    EXPECT_TRUE(hom.pass);
    EXPECT_EQ(hom.checked, 121u);

    auto a4 = verify_suite("a4-counterexample");
    EXPECT_TRUE(a4.pass);
    EXPECT_FALSE(a4.witness.is_null());
    EXPECT_TRUE(verify_suite("d4_counterexample").pass);
}

TEST(Suites, PairwisePropertyFailsInRankFour) {
    SuiteOptions o;
    o.n = 4;
    auto r = verify_suite("a3-pairwise", o);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.witness.is_null());
}

TEST(Suites, Errors) {
    EXPECT_THROW(verify_suite("no-such-suite"), std::out_of_range);
    SuiteOptions o;
    o.n = 9;
    EXPECT_THROW(verify_suite("oracle-hom", o), std::invalid_argument);
    o.n = 3;
    EXPECT_THROW(verify_suite("a4-counterexample", o), std::invalid_argument);
}

TEST(Suites, Deterministic) {
    SuiteOptions o;
    o.n = 4;
    o.samples = 300;
    o.seed = 7;
    auto a = verify_suite("mutation-oracle", o).to_json().dump();
    auto b = verify_suite("mutation-oracle", o).to_json().dump();
    EXPECT_EQ(a, b);
    o.seed = 8;
    EXPECT_TRUE(verify_suite("mutation-oracle", o).pass);
}
