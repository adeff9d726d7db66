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

#include "allpay/sim_harness.hpp"

#include "allpay/allocation.hpp"
#include "allpay/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace allpay {
namespace {

constexpr std::uint64_t SplitMix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t StreamKey(std::uint64_t seed, std::uint64_t trial, std::uint64_t user) noexcept
{
  return SplitMix64(SplitMix64(SplitMix64(seed) ^ trial) ^ user);
}

double ToUnit(std::uint64_t bits) noexcept
{
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<Executor> MakeExecutors(ScenarioConfig const &config)
{
  std::vector<Executor> executors;
  executors.reserve(config.capacities.size());
  for (std::size_t i = 0; i < config.capacities.size(); ++i)
  {
    double const own = config.executor_valuations.empty() ? 0.0 : config.executor_valuations[i];
    executors.push_back({static_cast<ExecutorId>(i), config.capacities[i], own});
  }
  return executors;
}

// Rethrows the captured error with the trial index prefixed, keeping its category.
[[noreturn]] void RethrowWithTrial(std::exception_ptr const &error, std::size_t trial)
{
  auto const tag = [trial](std::exception const &e) {
    return "trial " + std::to_string(trial) + ": " + e.what();
  };
  try
  {
    std::rethrow_exception(error);
  }
  catch (SolverFailure const &e)
  {
    throw SolverFailure(tag(e));
  }
  catch (SingularParameter const &e)
  {
    throw SingularParameter(tag(e));
  }
  catch (DomainError const &e)
  {
    throw DomainError(tag(e));
  }
  catch (ValidationError const &e)
  {
    throw ValidationError(tag(e));
  }
  catch (InvalidParameter const &e)
  {
    throw InvalidParameter(tag(e));
  }
  catch (Error const &e)
  {
    throw Error(tag(e));
  }
}

}  // namespace

void Validate(ScenarioConfig const &config)
{
  std::vector<std::string> problems;
  auto const               finite_positive = [](double x) { return std::isfinite(x) && x > 0.0; };

  if (!(config.lambda >= 0.0 && config.lambda <= 1.0))
  {
    problems.emplace_back("lambda must lie in [0, 1]");
  }
  if (config.A_choices.empty())
  {
    problems.emplace_back("A_choices must be nonempty");
  }
  if (!std::all_of(config.A_choices.begin(), config.A_choices.end(), finite_positive))
  {
    problems.emplace_back("A_choices entries must be positive");
  }
  if (config.capacities.empty())
  {
    problems.emplace_back("capacities must be nonempty (num_ecs >= 1)");
  }
  if (!std::all_of(config.capacities.begin(), config.capacities.end(), finite_positive))
  {
    problems.emplace_back("capacities entries must be positive");
  }
  if (!config.executor_valuations.empty() &&
      config.executor_valuations.size() != config.capacities.size())
  {
    problems.emplace_back("executor_valuations must match capacities in length");
  }
  if (config.baseline.cost_rule == CostRule::kFractionOfCapacity &&
      !(config.baseline.alpha > 0.0 && config.baseline.alpha <= 1.0))
  {
    problems.emplace_back("baseline.alpha must lie in (0, 1]");
  }
  if (config.users)
  {
    if (config.users->size() != config.num_eus)
    {
      problems.emplace_back("num_eus must equal the number of listed eus");
    }
    for (std::size_t i = 0; i < config.users->size(); ++i)
    {
      auto const &u = (*config.users)[i];
      if (!finite_positive(u.upper) || !(u.valuation >= 0.0 && u.valuation <= u.upper))
      {
        problems.push_back("eus[" + std::to_string(i) + "] needs A > 0 and valuation in [0, A]");
      }
      if (!(u.requirement >= 0.0) || !std::isfinite(u.requirement))
      {
        problems.push_back("eus[" + std::to_string(i) + "].requirement must be nonnegative");
      }
    }
  }

  if (!problems.empty())
  {
    std::ostringstream msg;
    msg << "invalid scenario config:";
    for (auto const &p : problems)
    {
      msg << "\n  - " << p;
    }
    throw ValidationError(msg.str());
  }
}

std::size_t GateSetSize(ScenarioConfig const &config)
{
  if (config.capacities.empty())
  {
    return 3;
  }
  auto const ratio = std::lround(static_cast<double>(config.num_eus) /
                                 static_cast<double>(config.capacities.size()));
  return std::max<std::size_t>(3, static_cast<std::size_t>(ratio));
}

double StreamUniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t user,
                     std::uint64_t draw)
{
  std::mt19937_64 engine{StreamKey(seed, trial, user)};
  engine.discard(draw);
  return ToUnit(engine());
}

Scenario GenerateScenario(ScenarioConfig const &config, std::size_t trial)
{
  Validate(config);

  Scenario scenario;
  scenario.executors     = MakeExecutors(config);
  scenario.lambda        = config.lambda;
  scenario.bid_rule      = config.bid_rule;
  scenario.service_rule  = config.service_rule;
  scenario.match_key     = config.match_key;
  scenario.gate_set_size = GateSetSize(config);

  if (config.users)
  {
    scenario.users = *config.users;
    for (std::size_t i = 0; i < scenario.users.size(); ++i)
    {
      scenario.users[i].id = static_cast<BidderId>(i);
    }
    return scenario;
  }

  std::vector<double> gates(config.A_choices.size());
  std::transform(config.A_choices.begin(), config.A_choices.end(), gates.begin(), [&](double a) {
    return MinValuation(scenario.gate_set_size, config.lambda, a);
  });

  scenario.users.reserve(config.num_eus);
  for (std::size_t i = 0; i < config.num_eus; ++i)
  {
    std::mt19937_64 engine{StreamKey(config.seed, trial, i)};
    auto const      choice = std::min(
        static_cast<std::size_t>(ToUnit(engine()) * static_cast<double>(config.A_choices.size())),
        config.A_choices.size() - 1);
    double const upper = config.A_choices[choice];
    double const gate  = gates[choice];
    double const v     = std::min(upper, gate + ToUnit(engine()) * (upper - gate));
    scenario.users.push_back({static_cast<BidderId>(i), upper, v, v});
  }
  return scenario;
}

std::array<OutcomeReport, 4> RunAllSchemes(Scenario const &scenario, BaselineConfig const &config)
{
  return {RunAuction(scenario), GreedyAllocate(scenario, config), PmmraAllocate(scenario, config),
          StackelbergAllocate(scenario, config)};
}

std::vector<TrialRecord> RunTrials(ScenarioConfig const &config, std::size_t num_trials,
                                   unsigned threads)
{
  if (num_trials == 0)
  {
    throw InvalidParameter("run_trials requires at least one trial");
  }
  Validate(config);

  std::vector<TrialRecord>        records(num_trials);
  std::vector<std::exception_ptr> errors(num_trials);
  std::atomic<std::size_t>        next{0};

  auto const worker = [&] {
    for (std::size_t t = next++; t < num_trials; t = next++)
    {
      try
      {
        records[t].trial    = t;
        records[t].outcomes = RunAllSchemes(GenerateScenario(config, t), config.baseline);
      }
      catch (...)
      {
        errors[t] = std::current_exception();
      }
    }
  };

  if (threads == 0)
  {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, num_trials));

  if (threads <= 1)
  {
    worker();
  }
  else
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i)
    {
      pool.emplace_back(worker);
    }
  }

  for (std::size_t t = 0; t < num_trials; ++t)
  {
    if (errors[t])
    {
      RethrowWithTrial(errors[t], t);
    }
  }
  return records;
}

std::vector<SchemeSummary> Summarize(std::vector<TrialRecord> const &records)
{
  std::vector<SchemeSummary> summaries;
  double const               count = static_cast<double>(records.size());

  for (auto const scheme : kAllSchemes)
  {
    SchemeSummary s;
    s.scheme = scheme;
    if (records.empty())
    {
      summaries.push_back(s);
      continue;
    }

    for (auto const &r : records)
    {
      s.mean_profit += r.Get(scheme).total_profit;
      s.mean_served += static_cast<double>(r.Get(scheme).ServedCount());
      s.mean_payment += r.Get(scheme).total_payments;
    }
    s.mean_profit /= count;
    s.mean_served /= count;
    s.mean_payment /= count;

    if (records.size() > 1)
    {
      double squares = 0.0;
      for (auto const &r : records)
      {
        double const d = r.Get(scheme).total_profit - s.mean_profit;
        squares += d * d;
      }
      s.std_profit = std::sqrt(squares / (count - 1.0));
    }
    summaries.push_back(s);
  }
  return summaries;
}

std::vector<ComparisonRow> ToComparisonRows(std::vector<TrialRecord> const &records)
{
  std::vector<ComparisonRow> rows;
  rows.reserve(records.size() * std::size(kAllSchemes));
  for (auto const &record : records)
  {
    for (auto const scheme : kAllSchemes)
    {
      auto const   &outcome = record.Get(scheme);
      ComparisonRow row;
      row.trial        = record.trial;
      row.scheme       = scheme;
      row.total_profit = outcome.total_profit;
      row.served_sets  = outcome.ServedCount();
      for (auto const &a : outcome.assignments)
      {
        row.winner_ids.push_back(a.bidder);
        row.winner_bids.push_back(a.bid);
        row.winner_payments.push_back(a.payment);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ComparisonRow> CompareSchemes(ScenarioConfig const &config, std::size_t num_trials,
                                          unsigned threads)
{
  return ToComparisonRows(RunTrials(config, num_trials, threads));
}

std::vector<SweepRow> SweepBids(SweepGrid const &grid)
{
  if (grid.ns.empty() || grid.lambdas.empty() || grid.uppers.empty() ||
      (grid.vs.empty() && grid.points == 0))
  {
    throw InvalidParameter("sweep grids must be nonempty");
  }

  std::vector<SweepRow> rows;
  for (auto const n : grid.ns)
  {
    for (auto const lambda : grid.lambdas)
    {
      for (auto const upper : grid.uppers)
      {
        auto const dist = ValuationDistribution::Uniform(upper);

        std::vector<double> vs = grid.vs;
        if (vs.empty())
        {
          vs.resize(grid.points);
          for (std::size_t i = 0; i < grid.points; ++i)
          {
            vs[i] = grid.points == 1 ? 0.0
                                     : upper * static_cast<double>(i) /
                                           static_cast<double>(grid.points - 1);
          }
        }

        for (auto const v : vs)
        {
          SweepRow row{n, lambda, upper, v, 0.0, 0.0};
          row.bid_inflated  = EquilibriumBid(dist, {.n = n, .lambda = lambda, .rule = BidRule::kInflated}, v);
          row.bid_deflated = EquilibriumBid(dist, {.n = n, .lambda = lambda, .rule = BidRule::kDeflated}, v);
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

std::vector<SweepRow> DefaultSweep()
{
  auto const unit_grid = [](std::vector<std::size_t> ns, std::vector<double> lambdas,
                            std::vector<double> uppers) {
    std::vector<SweepRow> rows;
    for (auto const upper : uppers)
    {
      SweepGrid grid{ns, lambdas, {upper}, {}, static_cast<std::size_t>(upper) + 1};
      auto      part = SweepBids(grid);
      rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
  };

  std::vector<SweepRow> rows = unit_grid({3}, {0.0, 0.25, 0.5, 0.75, 1.0}, {70.0});
  auto const by_n    = unit_grid({2, 3, 4, 5, 6}, {0.5}, {70.0});
  auto const by_a    = unit_grid({3}, {0.5}, {70.0, 80.0, 90.0});
  rows.insert(rows.end(), by_n.begin(), by_n.end());
  rows.insert(rows.end(), by_a.begin(), by_a.end());
  return rows;
}

}  // namespace allpay
