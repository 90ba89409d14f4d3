#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "hbl/catalog.hpp"
#include "hbl/error.hpp"
#include "hbl/suites.hpp"

using namespace hbl;

TEST(RunReport, CountsStayConsistent) {
  RunReport r("x");
  r.record("a", "law", true);
  r.record("b", "law", false);
  r.skip("c", "too big");
  LawReport two;
  two.add(LawResult{"l1", false, std::nullopt});
  two.add(LawResult{"l2", false, std::nullopt});
  r.record("d", two);
  EXPECT_EQ(r.instances, 4u);
  EXPECT_EQ(r.passed, 1u);
  EXPECT_EQ(r.failed.size(), 3u);
  EXPECT_EQ(r.failed_instances(), 2u);
  EXPECT_TRUE(r.consistent());
  EXPECT_FALSE(r.ok());

  RunReport s("y");
  s.record("e", "law", true);
  r.merge(s);
  EXPECT_EQ(r.instances, 5u);
  EXPECT_TRUE(r.consistent());
}

TEST(RunReport, JsonIsDeterministicAndComplete) {
  const auto braces = brace_catalog(3);
  const RunReport a = suite_mainth(braces);
  const RunReport b = suite_mainth(braces);
  EXPECT_EQ(a.to_json(), b.to_json());
  const auto j = nlohmann::json::parse(a.to_json());
  EXPECT_EQ(j.at("suite"), "mainth");
  EXPECT_EQ(j.at("instances").get<std::size_t>(), a.instances);
  EXPECT_FALSE(j.contains("wallTime"));
  EXPECT_TRUE(a.ok());
  EXPECT_NE(a.to_text().find("mainth"), std::string::npos);
}

TEST(Suites, SmallRunsPass) {
  const auto braces = brace_catalog(3);
  for (const auto& name : theorem_names()) {
    const RunReport r = run_theorem(name, braces);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_TRUE(r.consistent()) << name;
    EXPECT_GT(r.instances, 0u) << name;
  }
  EXPECT_THROW(run_theorem("nope", braces), PreconditionFailed);
}

TEST(Suites, BrokenBraceIsReportedNotThrown) {
  auto braces = brace_catalog(2);
  HopfAlgebra h2 = braces.back().brace.h2();
  h2.bi.alg.prod = mutate_entry(h2.prod(), 0, 0, Scalar(1));
  braces.push_back({"broken", HopfBrace(braces.back().brace.h1(), h2)});
  const RunReport r = suite_braces(braces);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failed_instances(), 1u);
  EXPECT_EQ(r.failed.front().instance, "broken");
  EXPECT_TRUE(r.consistent());
}

TEST(Suites, MutationSuiteAccountsForEveryMutation) {
  const RunReport r = suite_mutations(hopf_catalog(4), brace_catalog(3), 30, 3);
  EXPECT_EQ(r.instances, 30u);
  EXPECT_TRUE(r.consistent());
}
