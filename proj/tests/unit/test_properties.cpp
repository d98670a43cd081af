#include <gtest/gtest.h>

#include "property_suites.hpp"

namespace {

class PropertySuite : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PropertySuite, HundredSeededCasesWithoutFailure) {
  const auto& suite = rht::testing::all_suites().at(GetParam());
  const auto r = suite.run(20240611, 100);
  EXPECT_GE(r.cases, 100) << suite.name;
  EXPECT_EQ(r.failures, 0) << suite.name << ": " << r.first_failure;
}

INSTANTIATE_TEST_SUITE_P(All, PropertySuite,
                         ::testing::Range<std::size_t>(0, rht::testing::all_suites().size()),
                         [](const auto& info) {
                           return rht::testing::all_suites().at(info.param).name;
                         });

}  // namespace
