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

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace allpay {

double Epsilon(std::span<double const> valuations, std::size_t k)
{
  if (valuations.empty() || k == 0)
  {
    throw InvalidParameter("epsilon requires a nonempty valuation list and k >= 1");
  }
  auto const [lo, hi] = std::minmax_element(valuations.begin(), valuations.end());
  return (*hi - *lo) / static_cast<double>(k);
}

PartitionResult Partition(std::span<double const> sorted_valuations, double epsilon,
                          std::size_t min_size)
{
  if (!std::is_sorted(sorted_valuations.begin(), sorted_valuations.end()))
  {
    throw InvalidParameter("partition input must be sorted ascending");
  }
  if (!(epsilon >= 0.0))
  {
    throw InvalidParameter("partition epsilon must be nonnegative");
  }

  PartitionResult          result;
  std::vector<std::size_t> open;

  auto const close = [&] {
    if (open.empty())
    {
      return;
    }
    if (open.size() < min_size)
    {
      result.deleted.insert(result.deleted.end(), open.begin(), open.end());
    }
    else
    {
      result.kept.push_back(open);
    }
    open.clear();
  };

  for (std::size_t i = 0; i < sorted_valuations.size(); ++i)
  {
    if (!open.empty() && sorted_valuations[i] - sorted_valuations[open.front()] > epsilon)
    {
      close();
    }
    open.push_back(i);
  }
  close();

  return result;
}

AuctionSet DecideService(std::vector<Bidder> members, double epsilon, ServiceRule rule)
{
  if (members.size() < 3)
  {
    std::ostringstream msg;
    msg << "service decision needs at least 3 members, got " << members.size();
    throw InvalidParameter(msg.str());
  }

  AuctionSet set;
  set.epsilon = epsilon;

  std::vector<double> thresholds;
  thresholds.reserve(members.size());
  for (auto const &m : members)
  {
    thresholds.push_back(rule == ServiceRule::kAvgReserve ? m.personal_reserve : m.valuation);
    set.bid_sum += m.bid;
  }
  set.reserve_R = SetReserve(thresholds);
  set.served    = set.bid_sum >= set.reserve_R;

  if (set.served)
  {
    auto const top = std::min_element(members.begin(), members.end(), [](auto const &a, auto const &b) {
      return a.bid != b.bid ? a.bid > b.bid : a.id < b.id;
    });
    top->served = true;
    set.winner  = top->id;
  }

  set.members = std::move(members);
  return set;
}

std::vector<Match> MatchWinners(std::span<Bidder const> winners, std::span<Executor const> executors,
                                MatchKey key)
{
  std::vector<Bidder> ranked_winners(winners.begin(), winners.end());
  auto const          key_of = [key](Bidder const &b) {
    return key == MatchKey::kValuation ? b.valuation : b.personal_reserve;
  };
  std::sort(ranked_winners.begin(), ranked_winners.end(), [&](auto const &a, auto const &b) {
    return key_of(a) != key_of(b) ? key_of(a) > key_of(b) : a.id < b.id;
  });

  std::vector<Executor> ranked_executors(executors.begin(), executors.end());
  std::sort(ranked_executors.begin(), ranked_executors.end(), [](auto const &a, auto const &b) {
    return a.capacity != b.capacity ? a.capacity > b.capacity : a.id < b.id;
  });

  std::vector<Match> matches;
  auto const         pairs = std::min(ranked_winners.size(), ranked_executors.size());
  matches.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i)
  {
    matches.push_back({ranked_winners[i].id, ranked_executors[i].id});
  }
  return matches;
}

OutcomeReport RunAuction(Scenario const &scenario)
{
  OutcomeReport report;
  report.scheme = Scheme::kAllPay;

  std::map<double, double> gate_by_upper;
  std::vector<EndUser>     eligible;
  for (auto const &user : scenario.users)
  {
    auto it = gate_by_upper.find(user.upper);
    if (it == gate_by_upper.end())
    {
      it = gate_by_upper
               .emplace(user.upper,
                        MinValuation(scenario.gate_set_size, scenario.lambda, user.upper))
               .first;
    }
    if (user.valuation < it->second)
    {
      report.gated.push_back(user.id);
    }
    else
    {
      eligible.push_back(user);
    }
  }

  if (eligible.empty())
  {
    return report;
  }

  std::sort(eligible.begin(), eligible.end(), [](auto const &a, auto const &b) {
    return a.valuation != b.valuation ? a.valuation < b.valuation : a.id < b.id;
  });

  std::vector<double> valuations(eligible.size());
  std::transform(eligible.begin(), eligible.end(), valuations.begin(),
                 [](auto const &u) { return u.valuation; });

  double const epsilon   = Epsilon(valuations, scenario.executors.size());
  auto const   partition = Partition(valuations, epsilon);

  for (auto const index : partition.deleted)
  {
    report.deleted.push_back(eligible[index].id);
  }

  for (auto const &group : partition.kept)
  {
    std::vector<Bidder> members;
    members.reserve(group.size());
    for (auto const index : group)
    {
      auto const &user = eligible[index];
      auto const  dist = ValuationDistribution::Uniform(user.upper);
      BidParams const params{.n = group.size(), .lambda = scenario.lambda, .rule = scenario.bid_rule};

      Bidder bidder;
      bidder.id               = user.id;
      bidder.valuation        = user.valuation;
      bidder.requirement      = user.requirement;
      bidder.upper            = user.upper;
      bidder.bid              = EquilibriumBid(dist, params, user.valuation);
      bidder.personal_reserve =
          OptimalReserve(dist, group.size(), scenario.lambda, user.valuation).r_star;
      members.push_back(bidder);
    }
    report.sets.push_back(DecideService(std::move(members), epsilon, scenario.service_rule));
  }

  std::vector<Bidder> winners;
  for (auto const &set : report.sets)
  {
    if (set.served)
    {
      winners.push_back(*std::find_if(set.members.begin(), set.members.end(),
                                      [&](auto const &m) { return m.id == *set.winner; }));
    }
  }

  auto const matches = MatchWinners(winners, scenario.executors, scenario.match_key);

  std::unordered_map<BidderId, ExecutorId> executor_of;
  for (auto const &m : matches)
  {
    executor_of.emplace(m.bidder, m.executor);
  }

  for (auto &set : report.sets)
  {
    if (set.served && !executor_of.contains(*set.winner))
    {
      set.served = false;
      for (auto &member : set.members)
      {
        member.served = false;
      }
    }
  }

  for (auto const &m : matches)
  {
    auto const &winner = *std::find_if(winners.begin(), winners.end(),
                                       [&](auto const &w) { return w.id == m.bidder; });
    report.assignments.push_back({m.bidder, m.executor, winner.bid, winner.bid, 0.0});
  }

  for (auto const &set : report.sets)
  {
    if (set.served)
    {
      report.total_payments += set.bid_sum;
    }
  }
  report.total_profit = TotalProfit(report.sets);
  return report;
}

double TotalProfit(std::span<AuctionSet const> sets)
{
  return std::accumulate(sets.begin(), sets.end(), 0.0,
                         [](double acc, AuctionSet const &s) { return acc + s.Contribution(); });
}

double SetRevenue(std::size_t m, double lambda, double c)
{
  double const md = static_cast<double>(m);
  if (m == 0 || !(md - lambda > 0.0))
  {
    throw InvalidParameter("set revenue requires m - lambda > 0");
  }
  return md * c / (1.0 - lambda / md);
}

PartitionGap ComputePartitionGap(std::size_t n, double lambda, double c)
{
  double const nd = static_cast<double>(n);
  if (n < 3 || !(nd - 1.0 - lambda > 0.0))
  {
    throw InvalidParameter("partition gap requires n >= 3 and n - 1 - lambda > 0");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0) || !(c > 0.0))
  {
    throw InvalidParameter("partition gap requires lambda in [0, 1] and C > 0");
  }

  double const uneven = SetRevenue(n - 1, lambda, c) + SetRevenue(n, lambda, c) +
                        SetRevenue(n + 1, lambda, c);
  double const even   = 3.0 * SetRevenue(n, lambda, c);

  double const closed =
      2.0 * c * lambda * lambda / ((nd - 1.0 - lambda) * (nd + 1.0 - lambda) * (nd - lambda));
  return {uneven - even, closed};
}

}  // namespace allpay
