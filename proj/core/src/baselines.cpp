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

#include <algorithm>
#include <optional>

namespace allpay {
namespace {

struct Sale
{
  std::size_t user;
  double      bid;
  double      payment;
};

std::vector<Executor> ByCapacityDescending(std::vector<Executor> executors)
{
  std::sort(executors.begin(), executors.end(), [](auto const &a, auto const &b) {
    return a.capacity != b.capacity ? a.capacity > b.capacity : a.id < b.id;
  });
  return executors;
}

// Shared walk: executors by capacity, users ordered by valuation, each sale removes its buyer.
template <typename PickSale>
OutcomeReport Allocate(Scheme scheme, Scenario const &scenario, BaselineConfig const &config,
                       PickSale pick)
{
  Validate(config);

  std::vector<std::size_t> order(scenario.users.size());
  for (std::size_t i = 0; i < order.size(); ++i)
  {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto const &ua = scenario.users[a];
    auto const &ub = scenario.users[b];
    return ua.valuation != ub.valuation ? ua.valuation > ub.valuation : ua.id < ub.id;
  });

  OutcomeReport     report;
  std::vector<bool> taken(scenario.users.size(), false);
  report.scheme = scheme;

  for (auto const &executor : ByCapacityDescending(scenario.executors))
  {
    std::vector<std::size_t> pool;
    for (auto const index : order)
    {
      if (!taken[index] && scenario.users[index].requirement <= executor.capacity)
      {
        pool.push_back(index);
      }
    }
    if (pool.empty())
    {
      continue;
    }

    std::optional<Sale> const sale = pick(pool);
    if (!sale)
    {
      continue;
    }

    taken[sale->user] = true;
    double const cost = ExecutorCost(executor, config);
    report.assignments.push_back(
        {scenario.users[sale->user].id, executor.id, sale->bid, sale->payment, cost});
    report.total_payments += sale->payment;
    report.total_profit += sale->payment - cost;
  }
  return report;
}

}  // namespace

void Validate(BaselineConfig const &config)
{
  if (config.cost_rule == CostRule::kFractionOfCapacity && !(config.alpha > 0.0 && config.alpha <= 1.0))
  {
    throw ValidationError("baseline alpha must lie in (0, 1]");
  }
}

double ExecutorCost(Executor const &executor, BaselineConfig const &config)
{
  return config.cost_rule == CostRule::kOwnValuation ? executor.own_valuation
                                                     : config.alpha * executor.capacity;
}

OutcomeReport GreedyAllocate(Scenario const &scenario, BaselineConfig const &config)
{
  return Allocate(Scheme::kGreedy, scenario, config,
                  [&](std::vector<std::size_t> const &pool) -> std::optional<Sale> {
                    double const v = scenario.users[pool.front()].valuation;
                    return Sale{pool.front(), v, v};
                  });
}

OutcomeReport PmmraAllocate(Scenario const &scenario, BaselineConfig const &config)
{
  return Allocate(Scheme::kPmmra, scenario, config,
                  [&](std::vector<std::size_t> const &pool) -> std::optional<Sale> {
                    double const v     = scenario.users[pool.front()].valuation;
                    double const price = pool.size() > 1 ? scenario.users[pool[1]].valuation : v;
                    return Sale{pool.front(), v, price};
                  });
}

double MonopolyPrice(double upper)
{
  if (!(upper > 0.0))
  {
    throw InvalidParameter("monopoly price requires A > 0");
  }
  return 0.5 * upper;
}

OutcomeReport StackelbergAllocate(Scenario const &scenario, BaselineConfig const &config)
{
  return Allocate(Scheme::kStackelberg, scenario, config,
                  [&](std::vector<std::size_t> const &pool) -> std::optional<Sale> {
                    double upper = 0.0;
                    for (auto const index : pool)
                    {
                      upper = std::max(upper, scenario.users[index].upper);
                    }
                    double const price = MonopolyPrice(upper);
                    if (scenario.users[pool.front()].valuation < price)
                    {
                      return std::nullopt;
                    }
                    return Sale{pool.front(), price, price};
                  });
}

}  // namespace allpay
