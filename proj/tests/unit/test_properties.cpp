#include <coxl2/verify.hpp>

#include <gtest/gtest.h>

#include <tuple>

using namespace coxl2;

// Each suite's randomized checks, repeated over several seeds.
class PropertySuite : public ::testing::TestWithParam<std::tuple<std::string, std::uint64_t>> {};

TEST_P(PropertySuite, AllChecksPass)
{
    const auto& [suite, seed] = GetParam();
    auto results = run_suite(suite, seed);
    ASSERT_FALSE(results.empty());
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.suite << " / " << r.name << ": " << r.detail;
}

INSTANTIATE_TEST_SUITE_P(Seeds, PropertySuite,
                         ::testing::Combine(::testing::ValuesIn(suite_names()), ::testing::Values(2u, 3u, 11u)),
                         [](const auto& info) {
                             return std::get<0>(info.param) + "_seed" + std::to_string(std::get<1>(info.param));
                         });
