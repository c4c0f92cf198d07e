#include <gtest/gtest.h>

#include "dkit/error.hpp"
#include "dkit/properties.hpp"

using namespace dkit;

class Law : public ::testing::TestWithParam<std::string> {};

TEST_P(Law, HoldsOnTwoHundredCases) {
  auto r = properties::run(GetParam(), 200, 42);
  EXPECT_TRUE(r.passed()) << r.law << ": " << r.failures << " failures, e.g. " << r.counterexample.value_or("");
  EXPECT_EQ(r.cases, 200u);
  EXPECT_GT(r.exercised, 0u);
}

INSTANTIATE_TEST_SUITE_P(All, Law, ::testing::ValuesIn(properties::laws()),
                         [](const auto& info) { return info.param; });

TEST(Properties, SeedDeterminesTheRun) {
  auto a = properties::run("distributivity", 50, 7);
  auto b = properties::run("distributivity", 50, 7);
  EXPECT_EQ(a.exercised, b.exercised);
  EXPECT_THROW(properties::run("no_such_law", 1, 1), PreconditionError);
}
