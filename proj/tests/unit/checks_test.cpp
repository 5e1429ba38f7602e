#include <gtest/gtest.h>

#include <set>

#include "involution_lab/checks.hpp"
#include "involution_lab/errors.hpp"

using namespace involution_lab;

TEST(Checks, NamesAreUniqueAndRecognised) {
  std::set<std::string_view> seen;
  for (const auto name : check_names()) {
    EXPECT_TRUE(seen.insert(name).second) << name;
    EXPECT_TRUE(is_check_name(name));
  }
  EXPECT_TRUE(is_check_name("all"));
  EXPECT_FALSE(is_check_name("nonsense"));
  EXPECT_THROW((void)run_check("nonsense"), ArgumentError);
}

TEST(Checks, EveryBatchExceptPrintedFirstRowPasses) {
  const auto outcomes = run_check("all");
  ASSERT_EQ(outcomes.size(), check_names().size());
  for (const auto& o : outcomes) {
    if (o.name == "table1") continue;
    EXPECT_TRUE(o.passed) << o.name << ": " << o.counterexample.value_or("");
    EXPECT_FALSE(o.counterexample.has_value()) << o.name;
  }
}

TEST(Checks, PrintedFirstRowDisagreesOnlyAtTwentyAndTwentyOne) {
  const auto outcomes = run_check("table1");
  ASSERT_EQ(outcomes.size(), 1U);
  EXPECT_FALSE(outcomes[0].passed);
  EXPECT_NE(outcomes[0].detail.find("disagreeing cells n = 20,21"), std::string::npos) << outcomes[0].detail;
  ASSERT_TRUE(outcomes[0].counterexample.has_value());
  EXPECT_NE(outcomes[0].counterexample->find("n=20"), std::string::npos);
}

TEST(Checks, ParametersNarrowTheRange) {
  CheckParams params;
  params.p = 3;
  params.n_max = 6;
  const auto outcomes = run_check("lemma21", params);
  ASSERT_EQ(outcomes.size(), 1U);
  EXPECT_TRUE(outcomes[0].passed);
  EXPECT_NE(outcomes[0].detail.find("p=3 n<=6"), std::string::npos) << outcomes[0].detail;

  params.p = 4;
  EXPECT_THROW((void)run_check("lemma21", params), ArgumentError);
}

TEST(Checks, TightCapPropagatesResourceError) {
  CheckParams params;
  params.limits.max_permutations = 10;
  EXPECT_THROW((void)run_check("lemma21", params), ResourceError);
}
