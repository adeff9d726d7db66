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

#include "allpay/allocation.hpp"
#include "allpay/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <optional>
#include <set>

namespace allpay {
namespace {

// The {60, 65, 68} set on A = 70, n = 3, lambda = 0.5 with its frozen bids and reserves.
std::vector<Bidder> DeskSet()
{
  return {
      {.id = 0, .valuation = 60.0, .bid = 35.265306122448980, .personal_reserve = 45.0, .requirement = 60.0, .upper = 70.0},
      {.id = 1, .valuation = 65.0, .bid = 44.836734693877551, .personal_reserve = 42.916666666666667, .requirement = 65.0, .upper = 70.0},
      {.id = 2, .valuation = 68.0, .bid = 51.335836734693878, .personal_reserve = 41.666666666666667, .requirement = 68.0, .upper = 70.0},
  };
}

TEST(Epsilon, Examples)
{
  EXPECT_DOUBLE_EQ(Epsilon(std::vector<double>{10, 40, 70}, 3), 20.0);
  EXPECT_DOUBLE_EQ(Epsilon(std::vector<double>{50, 50, 50}, 3), 0.0);
  EXPECT_NEAR(Epsilon(std::vector<double>{10, 11, 12, 30, 31, 50, 51, 52, 53}, 3), 43.0 / 3.0, 1e-12);
  EXPECT_THROW(Epsilon(std::vector<double>{10, 20}, 0), InvalidParameter);
  EXPECT_THROW(Epsilon(std::vector<double>{}, 3), InvalidParameter);
}

TEST(Partition, Examples)
{
  std::vector<double> const values{10, 11, 12, 30, 31, 50, 51, 52, 53};
  auto const                result = Partition(values, 14.333);
  ASSERT_EQ(result.kept.size(), 2u);
  EXPECT_EQ(result.kept[0], (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(result.kept[1], (std::vector<std::size_t>{5, 6, 7, 8}));
  EXPECT_EQ(result.deleted, (std::vector<std::size_t>{3, 4}));

  auto const empty = Partition(std::vector<double>{}, 5.0);
  EXPECT_TRUE(empty.kept.empty());
  EXPECT_TRUE(empty.deleted.empty());

  auto const single = Partition(std::vector<double>{60, 65, 68}, 20.0);
  ASSERT_EQ(single.kept.size(), 1u);
  EXPECT_EQ(single.kept[0].size(), 3u);
  EXPECT_TRUE(single.deleted.empty());
}

TEST(Partition, RangeBoundIsInclusive)
{
  auto const result = Partition(std::vector<double>{10, 15, 20}, 10.0);
  ASSERT_EQ(result.kept.size(), 1u);
  EXPECT_EQ(result.kept[0].size(), 3u);
}

TEST(Partition, RejectsBadInput)
{
  EXPECT_THROW(Partition(std::vector<double>{3, 1, 2}, 1.0), InvalidParameter);
  EXPECT_THROW(Partition(std::vector<double>{1, 2, 3}, -1.0), InvalidParameter);
}

TEST(Partition, MatchesBruteForceOnRandomInstances)
{
  std::mt19937_64 engine{2024};
  for (int instance = 0; instance < 1000; ++instance)
  {
    std::size_t const   n = std::uniform_int_distribution<std::size_t>{0, 50}(engine);
    std::vector<double> values(n);
    for (auto &v : values)
    {
      v = std::uniform_real_distribution<double>{0.0, 100.0}(engine);
    }
    std::sort(values.begin(), values.end());
    std::size_t const k   = std::uniform_int_distribution<std::size_t>{1, 6}(engine);
    double const      eps = values.empty() ? 1.0 : Epsilon(values, k);

    auto const actual   = Partition(values, eps);
    auto const expected = oracle::AnchorGroups(values, eps, 3);
    ASSERT_EQ(actual.kept, expected.kept);
    ASSERT_EQ(actual.deleted, expected.deleted);

    std::multiset<std::size_t> seen(actual.deleted.begin(), actual.deleted.end());
    for (auto const &set : actual.kept)
    {
      ASSERT_GE(set.size(), 3u);
      ASSERT_LE(values[set.back()] - values[set.front()], eps);
      seen.insert(set.begin(), set.end());
    }
    ASSERT_EQ(seen.size(), n);
    ASSERT_EQ(std::set<std::size_t>(seen.begin(), seen.end()).size(), n);
  }
}

TEST(DecideService, DeskSet)
{
  auto const set = DecideService(DeskSet(), 8.0, ServiceRule::kAvgReserve);
  EXPECT_TRUE(set.served);
  EXPECT_NEAR(set.reserve_R, 43.194444444444444, 1e-9);
  EXPECT_NEAR(set.bid_sum, 131.43787755102041, 1e-9);
  ASSERT_TRUE(set.winner.has_value());
  EXPECT_EQ(*set.winner, 2u);
  EXPECT_TRUE(set.members[2].served);
  EXPECT_FALSE(set.members[0].served);
  EXPECT_NEAR(set.Contribution(), 88.243433106575964, 1e-9);
}

TEST(DecideService, AverageValuationThreshold)
{
  auto const set = DecideService(DeskSet(), 8.0, ServiceRule::kAvgValuation);
  EXPECT_NEAR(set.reserve_R, 193.0 / 3.0, 1e-12);
  EXPECT_TRUE(set.served);
}

TEST(DecideService, ZeroBidsAreNotServed)
{
  auto members = DeskSet();
  for (auto &m : members)
  {
    m.bid = 0.0;
  }
  auto const set = DecideService(members, 8.0, ServiceRule::kAvgReserve);
  EXPECT_FALSE(set.served);
  EXPECT_FALSE(set.winner.has_value());
  EXPECT_DOUBLE_EQ(set.Contribution(), 0.0);
}

TEST(DecideService, TiesGoToLowestId)
{
  auto members = DeskSet();
  members[0].bid = members[2].bid;
  members[0].id  = 9;
  members[2].id  = 4;
  auto const set = DecideService(members, 8.0, ServiceRule::kAvgReserve);
  EXPECT_EQ(*set.winner, 4u);
}

TEST(DecideService, RequiresThreeMembers)
{
  auto members = DeskSet();
  members.pop_back();
  EXPECT_THROW(DecideService(members, 8.0, ServiceRule::kAvgReserve), InvalidParameter);
}

TEST(MatchWinners, RankPairing)
{
  std::vector<Bidder> winners{{.id = 1, .valuation = 55.0}, {.id = 0, .valuation = 68.0}};
  std::vector<Executor> executors{{0, 70.0, 0.0}, {1, 80.0, 0.0}, {2, 90.0, 0.0}};
  auto const matches = MatchWinners(winners, executors);
  ASSERT_EQ(matches.size(), 2u);
  EXPECT_EQ(matches[0].bidder, 0u);
  EXPECT_EQ(matches[0].executor, 2u);
  EXPECT_EQ(matches[1].bidder, 1u);
  EXPECT_EQ(matches[1].executor, 1u);

  EXPECT_TRUE(MatchWinners({}, executors).empty());

  std::vector<Bidder> three{{.id = 0, .valuation = 50.0}, {.id = 1, .valuation = 60.0}, {.id = 2, .valuation = 40.0}};
  std::vector<Executor> one{{7, 90.0, 0.0}};
  auto const exhausted = MatchWinners(three, one);
  ASSERT_EQ(exhausted.size(), 1u);
  EXPECT_EQ(exhausted[0].bidder, 1u);
}

TEST(MatchWinners, ReserveKeyReversesOrder)
{
  std::vector<Bidder> winners{{.id = 0, .valuation = 68.0, .personal_reserve = 41.0},
                              {.id = 1, .valuation = 55.0, .personal_reserve = 47.0}};
  std::vector<Executor> executors{{0, 70.0, 0.0}, {1, 90.0, 0.0}};
  auto const matches = MatchWinners(winners, executors, MatchKey::kReserve);
  EXPECT_EQ(matches[0].bidder, 1u);
  EXPECT_EQ(matches[0].executor, 1u);
}

TEST(TotalProfit, Examples)
{
  auto const served = DecideService(DeskSet(), 8.0, ServiceRule::kAvgReserve);
  EXPECT_NEAR(TotalProfit(std::vector<AuctionSet>{served}), 88.243433106575964, 1e-9);
  EXPECT_DOUBLE_EQ(TotalProfit(std::vector<AuctionSet>{}), 0.0);

  AuctionSet other;
  other.served    = true;
  other.bid_sum   = 30.0;
  other.reserve_R = 20.0;
  EXPECT_NEAR(TotalProfit(std::vector<AuctionSet>{served, other}), 98.243433106575964, 1e-9);
}

TEST(ComputePartitionGap, Examples)
{
  auto const a = ComputePartitionGap(4, 1.0, 1.0);
  EXPECT_NEAR(a.direct, 1.0 / 12.0, 1e-12);
  EXPECT_NEAR(a.closed_form, 1.0 / 12.0, 1e-12);

  auto const zero = ComputePartitionGap(7, 0.0, 3.0);
  EXPECT_NEAR(zero.direct, 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(zero.closed_form, 0.0);

  auto const c = ComputePartitionGap(5, 0.5, 2.0);
  EXPECT_NEAR(c.closed_form, 0.011544011544011544, 1e-15);
  EXPECT_NEAR(c.direct, c.closed_form, 1e-9);

  EXPECT_THROW(ComputePartitionGap(2, 0.5, 1.0), InvalidParameter);
  EXPECT_THROW(ComputePartitionGap(5, 0.5, 0.0), InvalidParameter);
}

TEST(ComputePartitionGap, UnevenSplitNeverLoses)
{
  for (std::size_t n = 3; n <= 12; ++n)
  {
    for (double lambda : {0.25, 0.5, 0.75, 1.0})
    {
      double const uneven = SetRevenue(n - 1, lambda, 1.0) + SetRevenue(n, lambda, 1.0) +
                            SetRevenue(n + 1, lambda, 1.0);
      EXPECT_GT(uneven, 3.0 * SetRevenue(n, lambda, 1.0));
      EXPECT_GT(ComputePartitionGap(n, lambda, 1.0).closed_form, 0.0);
    }
  }
}

Scenario DeskScenario()
{
  Scenario s;
  s.users     = {{0, 70.0, 60.0, 60.0}, {1, 70.0, 65.0, 65.0}, {2, 70.0, 68.0, 68.0}};
  s.executors = {{0, 90.0, 0.0}};
  s.lambda    = 0.5;
  return s;
}

TEST(RunAuction, SingleSetOneExecutor)
{
  auto const report = RunAuction(DeskScenario());
  ASSERT_EQ(report.sets.size(), 1u);
  ASSERT_EQ(report.assignments.size(), 1u);
  EXPECT_EQ(report.assignments[0].bidder, 2u);
  EXPECT_EQ(report.assignments[0].executor, 0u);
  EXPECT_NEAR(report.assignments[0].payment, 51.335836734693878, 1e-9);
  EXPECT_NEAR(report.total_profit, 88.243433106575964, 1e-9);
  EXPECT_NEAR(report.total_payments, 131.43787755102041, 1e-9);
  EXPECT_TRUE(report.gated.empty());
  EXPECT_TRUE(report.deleted.empty());
}

TEST(RunAuction, AllGatedGivesEmptyAuction)
{
  auto scenario = DeskScenario();
  for (auto &u : scenario.users)
  {
    u.valuation = 10.0;
  }
  auto const report = RunAuction(scenario);
  EXPECT_EQ(report.gated.size(), 3u);
  EXPECT_TRUE(report.sets.empty());
  EXPECT_TRUE(report.assignments.empty());
  EXPECT_DOUBLE_EQ(report.total_profit, 0.0);
}

// Anchors of consecutive sets sit more than epsilon apart and epsilon is the
// range over k, so there are never more kept sets than executors.
TEST(RunAuction, NeverMoreSetsThanExecutors)
{
  std::mt19937_64 engine{17};
  for (int trial = 0; trial < 500; ++trial)
  {
    Scenario s;
    s.lambda = 0.5;
    auto const k = std::uniform_int_distribution<std::size_t>{1, 5}(engine);
    for (std::size_t e = 0; e < k; ++e)
    {
      s.executors.push_back({static_cast<ExecutorId>(e), 60.0 + 10.0 * static_cast<double>(e), 0.0});
    }
    auto const n = std::uniform_int_distribution<std::size_t>{3, 40}(engine);
    for (std::size_t i = 0; i < n; ++i)
    {
      double const v = std::uniform_real_distribution<double>{53.0, 70.0}(engine);
      s.users.push_back({static_cast<BidderId>(i), 70.0, v, v});
    }
    auto const report = RunAuction(s);
    ASSERT_LE(report.sets.size(), k);
    ASSERT_EQ(report.assignments.size(), report.ServedCount());
  }
}

TEST(RunAuction, OrderOfUsersDoesNotMatter)
{
  Scenario s;
  s.lambda    = 0.5;
  s.executors = {{0, 70.0, 0.0}, {1, 80.0, 0.0}, {2, 90.0, 0.0}};
  std::mt19937_64 engine{5};
  for (BidderId i = 0; i < 12; ++i)
  {
    double const v = std::uniform_real_distribution<double>{55.0, 70.0}(engine);
    s.users.push_back({i, 70.0, v, v});
  }
  auto const reference = RunAuction(s);
  std::shuffle(s.users.begin(), s.users.end(), engine);
  auto const shuffled = RunAuction(s);
  ASSERT_EQ(reference.sets.size(), shuffled.sets.size());
  for (std::size_t i = 0; i < reference.sets.size(); ++i)
  {
    ASSERT_EQ(reference.sets[i].members.size(), shuffled.sets[i].members.size());
    for (std::size_t j = 0; j < reference.sets[i].members.size(); ++j)
    {
      EXPECT_EQ(reference.sets[i].members[j].id, shuffled.sets[i].members[j].id);
    }
  }
  EXPECT_DOUBLE_EQ(reference.total_profit, shuffled.total_profit);
}

// Sets are value-contiguous: with epsilon held fixed, a lower report can only
// land in a set whose anchor is at or below the anchor it had before.
TEST(RunAuction, LoweringValuationNeverRaisesAnchor)
{
  auto const anchor_of = [](OutcomeReport const &report, BidderId who) -> std::optional<double> {
    for (auto const &set : report.sets)
    {
      for (auto const &m : set.members)
      {
        if (m.id == who)
        {
          return set.members.front().valuation;
        }
      }
    }
    return std::nullopt;
  };

  Scenario s;
  s.lambda    = 0.5;
  s.executors = {{0, 70.0, 0.0}, {1, 80.0, 0.0}, {2, 90.0, 0.0}};
  std::mt19937_64 engine{99};
  int             compared = 0;
  for (int trial = 0; trial < 300; ++trial)
  {
    s.users.clear();
    for (BidderId i = 0; i < 15; ++i)
    {
      double const v = std::uniform_real_distribution<double>{53.0, 70.0}(engine);
      s.users.push_back({i, 70.0, v, v});
    }
    auto const who = static_cast<BidderId>(std::uniform_int_distribution<int>{0, 14}(engine));
    double lo = 1e9, hi = -1e9;
    for (auto const &u : s.users)
    {
      if (u.id != who)
      {
        lo = std::min(lo, u.valuation);
        hi = std::max(hi, u.valuation);
      }
    }
    double const original = s.users[who].valuation;
    if (original <= lo || original >= hi)
    {
      continue;
    }

    auto lowered = s;
    lowered.users[who].valuation =
        std::uniform_real_distribution<double>{lo, original}(engine);

    auto const before = anchor_of(RunAuction(s), who);
    auto const after  = anchor_of(RunAuction(lowered), who);
    if (before && after)
    {
      EXPECT_LE(*after, *before);
      ++compared;
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(RunAuction, ServedSetsPayAllBidsAndProfitIsNonnegative)
{
  std::mt19937_64 engine{321};
  for (int trial = 0; trial < 300; ++trial)
  {
    Scenario s;
    s.lambda    = std::uniform_real_distribution<double>{0.0, 1.0}(engine);
    s.executors = {{0, 70.0, 0.0}, {1, 80.0, 0.0}, {2, 90.0, 0.0}};
    s.service_rule = trial % 2 == 0 ? ServiceRule::kAvgReserve : ServiceRule::kAvgValuation;
    s.gate_set_size = 4;
    auto const n = std::uniform_int_distribution<std::size_t>{0, 30}(engine);
    for (std::size_t i = 0; i < n; ++i)
    {
      double const upper = std::array{70.0, 80.0, 90.0}[i % 3];
      double const v     = std::uniform_real_distribution<double>{0.0, upper}(engine);
      s.users.push_back({static_cast<BidderId>(i), upper, v, v});
    }
    auto const report = RunAuction(s);
    double     payments = 0.0;
    for (auto const &set : report.sets)
    {
      ASSERT_GE(set.members.size(), 3u);
      ASSERT_GE(set.Contribution(), 0.0);
      if (set.served)
      {
        ASSERT_GE(set.bid_sum, set.reserve_R);
        payments += set.bid_sum;
        auto const winners = std::count_if(set.members.begin(), set.members.end(),
                                           [](Bidder const &b) { return b.served; });
        ASSERT_EQ(winners, 1);
      }
    }
    EXPECT_NEAR(report.total_payments, payments, 1e-9);
    EXPECT_GE(report.total_profit, 0.0);
    EXPECT_LE(report.assignments.size(), s.executors.size());
  }
}

}  // namespace
}  // namespace allpay
