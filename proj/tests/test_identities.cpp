#include "hexatile/identities.hpp"

#include <gtest/gtest.h>

using namespace hexatile;

namespace {

void expect_clean(const IdentityReport& rep)
{
    EXPECT_FALSE(rep.checks.empty());
    for (const auto& c : rep.checks) {
        EXPECT_EQ(c.failures, 0u) << rep.suite << "." << c.name << " on " << c.grid
                                  << (c.examples.empty() ? "" : " e.g. " + c.examples.front());
        EXPECT_GT(c.cases, 0u) << c.name;
    }
}

} // namespace

class Suite : public ::testing::TestWithParam<std::string> {};

TEST_P(Suite, PassesAtDefaultRanges) { expect_clean(verify_identities(GetParam())); }

INSTANTIATE_TEST_SUITE_P(All, Suite, ::testing::ValuesIn(identity_suites()));

TEST(Identities, SuiteNames)
{
    const std::vector<std::string> want{"macmahon", "byun", "p1md", "d1", "lu", "schur", "sums", "condense", "symmetry"};
    EXPECT_EQ(identity_suites(), want);
    EXPECT_THROW(verify_identities("nope"), std::invalid_argument);
}

TEST(Identities, SumsNamedChecks)
{
    const IdentityReport rep = verify_identities("sums");
    for (const char* name : {"sum_formula", "s_a_closed", "s_a_recursion", "factorial_sum", "cancel1", "cancel2",
                             "cancel3", "elementary"})
        EXPECT_NE(rep.find(name), nullptr) << name;
}

TEST(Identities, AllPrefixesNames)
{
    Ranges r{2, 2, 2, 1};
    const IdentityReport rep = verify_identities("all", r);
    EXPECT_TRUE(rep.passed());
    EXPECT_NE(rep.find("lu.factorization"), nullptr);
    EXPECT_NE(rep.find("byun.byun_odd"), nullptr);
}

TEST(Identities, LuLargerRange)
{
    Ranges r;
    r.amax = 6;
    r.bmax = 6;
    r.cmax = 6;
    expect_clean(verify_identities("lu", r));
}

TEST(Identities, JsonReport)
{
    const nlohmann::json j = verify_identities("lu", Ranges{2, 2, 2, 1}).to_json();
    EXPECT_EQ(j.at("suite"), "lu");
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_EQ(j.at("checks").size(), 3u);
    EXPECT_TRUE(j.at("checks").at(0).contains("grid"));
}

TEST(Identities, ThreadCountIrrelevant)
{
    const Ranges r{3, 3, 3, 2};
    const auto one = verify_identities("condense", r, 1).to_json();
    const auto many = verify_identities("condense", r, 3).to_json();
    EXPECT_EQ(one, many);
}
