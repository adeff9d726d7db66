//------------------------------------------------------------------------------
//
//   Copyright 2026 The allpay Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "allpay/baselines.hpp"
#include "allpay/errors.hpp"

#include <gtest/gtest.h>

namespace allpay {
namespace {

Scenario ThreeUsers(std::vector<double> capacities)
{
  Scenario s;
  s.users = {{0, 70.0, 60.0, 60.0}, {1, 70.0, 65.0, 65.0}, {2, 70.0, 68.0, 68.0}};
  for (std::size_t i = 0; i < capacities.size(); ++i)
  {
    s.executors.push_back({static_cast<ExecutorId>(i), capacities[i], 0.0});
  }
  return s;
}

TEST(Greedy, ThreeExecutors)
{
  auto const report = GreedyAllocate(ThreeUsers({70.0, 80.0, 90.0}));
  ASSERT_EQ(report.assignments.size(), 3u);
  EXPECT_DOUBLE_EQ(report.assignments[0].payment, 68.0);
  EXPECT_EQ(report.assignments[0].executor, 2u);
  EXPECT_DOUBLE_EQ(report.assignments[1].payment, 65.0);
  EXPECT_DOUBLE_EQ(report.assignments[2].payment, 60.0);
  EXPECT_DOUBLE_EQ(report.total_profit, 73.0);
  EXPECT_DOUBLE_EQ(report.total_payments, 193.0);
  EXPECT_EQ(report.scheme, Scheme::kGreedy);
}

TEST(Greedy, NoFeasibleBidder)
{
  auto const report = GreedyAllocate(ThreeUsers({30.0, 40.0}));
  EXPECT_TRUE(report.assignments.empty());
  EXPECT_DOUBLE_EQ(report.total_profit, 0.0);
}

TEST(Greedy, SingleExecutor)
{
  auto const report = GreedyAllocate(ThreeUsers({90.0}));
  ASSERT_EQ(report.assignments.size(), 1u);
  EXPECT_EQ(report.assignments[0].bidder, 2u);
  EXPECT_DOUBLE_EQ(report.total_profit, 23.0);
}

TEST(Greedy, FeasibilityLimitsPool)
{
  // Only the 60 fits the small machine once the 66 and 68 are gone or too big.
  auto scenario = ThreeUsers({62.0});
  auto const report = GreedyAllocate(scenario);
  ASSERT_EQ(report.assignments.size(), 1u);
  EXPECT_EQ(report.assignments[0].bidder, 0u);
}

TEST(Greedy, OwnValuationCost)
{
  auto scenario = ThreeUsers({90.0});
  scenario.executors[0].own_valuation = 50.0;
  auto const report = GreedyAllocate(scenario, {.cost_rule = CostRule::kOwnValuation});
  EXPECT_DOUBLE_EQ(report.total_profit, 18.0);
}

TEST(Greedy, RejectsBadAlpha)
{
  EXPECT_THROW(GreedyAllocate(ThreeUsers({90.0}), {.alpha = 0.0}), ValidationError);
  EXPECT_THROW(GreedyAllocate(ThreeUsers({90.0}), {.alpha = 1.5}), ValidationError);
}

TEST(Pmmra, SecondPrice)
{
  auto const report = PmmraAllocate(ThreeUsers({90.0}));
  ASSERT_EQ(report.assignments.size(), 1u);
  EXPECT_EQ(report.assignments[0].bidder, 2u);
  EXPECT_DOUBLE_EQ(report.assignments[0].bid, 68.0);
  EXPECT_DOUBLE_EQ(report.assignments[0].payment, 65.0);
  EXPECT_DOUBLE_EQ(report.total_profit, 20.0);
}

TEST(Pmmra, SingletonPaysOwnValuation)
{
  Scenario s;
  s.users     = {{0, 70.0, 60.0, 60.0}};
  s.executors = {{0, 90.0, 0.0}};
  auto const report = PmmraAllocate(s);
  ASSERT_EQ(report.assignments.size(), 1u);
  EXPECT_DOUBLE_EQ(report.assignments[0].payment, 60.0);
}

TEST(Pmmra, NoBidders)
{
  Scenario s;
  s.executors = {{0, 90.0, 0.0}};
  EXPECT_TRUE(PmmraAllocate(s).assignments.empty());
}

TEST(Pmmra, NeverPaysMoreThanGreedy)
{
  auto const scenario = ThreeUsers({70.0, 80.0, 90.0});
  auto const greedy   = GreedyAllocate(scenario);
  auto const pmmra    = PmmraAllocate(scenario);
  ASSERT_EQ(greedy.assignments.size(), pmmra.assignments.size());
  for (std::size_t i = 0; i < greedy.assignments.size(); ++i)
  {
    EXPECT_EQ(greedy.assignments[i].bidder, pmmra.assignments[i].bidder);
    EXPECT_LE(pmmra.assignments[i].payment, greedy.assignments[i].payment);
  }
}

TEST(Stackelberg, MonopolyPrice)
{
  EXPECT_DOUBLE_EQ(MonopolyPrice(80.0), 40.0);
  EXPECT_DOUBLE_EQ(MonopolyPrice(70.0), 35.0);
  EXPECT_THROW(MonopolyPrice(0.0), InvalidParameter);
}

TEST(Stackelberg, PostedPriceSale)
{
  auto const report = StackelbergAllocate(ThreeUsers({90.0}));
  ASSERT_EQ(report.assignments.size(), 1u);
  EXPECT_EQ(report.assignments[0].bidder, 2u);
  EXPECT_DOUBLE_EQ(report.assignments[0].payment, 35.0);
  EXPECT_DOUBLE_EQ(report.total_profit, 35.0 - 45.0);
}

TEST(Stackelberg, NoSaleBelowPrice)
{
  Scenario s;
  s.users     = {{0, 70.0, 20.0, 20.0}, {1, 70.0, 30.0, 30.0}};
  s.executors = {{0, 90.0, 0.0}};
  EXPECT_TRUE(StackelbergAllocate(s).assignments.empty());
}

TEST(Stackelberg, ConstantPriceForSameUpper)
{
  auto const report = StackelbergAllocate(ThreeUsers({70.0, 80.0, 90.0}));
  ASSERT_EQ(report.assignments.size(), 3u);
  for (auto const &a : report.assignments)
  {
    EXPECT_DOUBLE_EQ(a.payment, 35.0);
  }
}

}  // namespace
}  // namespace allpay
