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

#pragma once

#include "allpay/baselines.hpp"
#include "allpay/types.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace allpay {

/// Desk-scale experiment setup. Defaults: 12 users, executors of capacity
/// 70/80/90, A drawn from {70, 80, 90}, lambda = 0.5.
struct ScenarioConfig
{
  std::size_t         num_eus   = 12;
  double              lambda    = 0.5;
  std::vector<double> A_choices = {70.0, 80.0, 90.0};
  std::vector<double> capacities = {70.0, 80.0, 90.0};
  /// Own valuation per executor; empty means zero for every executor.
  std::vector<double> executor_valuations;
  BidRule             bid_rule     = BidRule::kInflated;
  ServiceRule         service_rule = ServiceRule::kAvgReserve;
  MatchKey            match_key    = MatchKey::kValuation;
  std::uint64_t       seed         = 42;
  BaselineConfig      baseline;
  /// Fixed users to replay instead of drawing them. Ids are reassigned by position.
  std::optional<std::vector<EndUser>> users;

  std::size_t num_ecs() const noexcept
  {
    return capacities.size();
  }
};

/// Throws ValidationError naming every offending field.
void Validate(ScenarioConfig const &config);

/// Set size used to evaluate the minimum-valuation gate: round(N / k), at least 3.
std::size_t GateSetSize(ScenarioConfig const &config);

/// Scenario for one trial. Each user draws A from A_choices, then a valuation
/// uniformly on [MinValuation(GateSetSize, lambda, A), A]; requirement equals
/// valuation. Draws come from a stream keyed on (seed, trial, user index), so
/// trials can be generated in any order or in parallel.
Scenario GenerateScenario(ScenarioConfig const &config, std::size_t trial);

/// Uniform double in [0, 1) from the stream keyed on (seed, trial, user); `draw`
/// selects the position inside that stream.
double StreamUniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t user,
                     std::uint64_t draw);

struct TrialRecord
{
  std::size_t                  trial = 0;
  std::array<OutcomeReport, 4> outcomes;  ///< indexed like kAllSchemes

  OutcomeReport const &Get(Scheme scheme) const
  {
    return outcomes[static_cast<std::size_t>(scheme)];
  }
};

/// Runs all four schemes on one scenario.
std::array<OutcomeReport, 4> RunAllSchemes(Scenario const &scenario, BaselineConfig const &config);

/// Runs `num_trials` seeded trials on up to `threads` workers (0 = hardware
/// concurrency). Records come back in trial order whatever the thread count.
/// A failing trial rethrows its error with "trial <i>: " prefixed.
std::vector<TrialRecord> RunTrials(ScenarioConfig const &config, std::size_t num_trials,
                                   unsigned threads = 1);

struct SchemeSummary
{
  Scheme scheme       = Scheme::kAllPay;
  double mean_profit  = 0.0;
  double std_profit   = 0.0;  ///< unbiased; 0 for a single trial
  double mean_served  = 0.0;
  double mean_payment = 0.0;
};

/// Per-scheme aggregates over `records`, reduced in trial order.
std::vector<SchemeSummary> Summarize(std::vector<TrialRecord> const &records);

struct ComparisonRow
{
  std::size_t           trial = 0;
  Scheme                scheme = Scheme::kAllPay;
  double                total_profit = 0.0;
  std::size_t           served_sets  = 0;
  std::vector<BidderId> winner_ids;
  std::vector<double>   winner_bids;
  std::vector<double>   winner_payments;
};

std::vector<ComparisonRow> ToComparisonRows(std::vector<TrialRecord> const &records);

/// One row per (trial, scheme), trials ascending, schemes in kAllSchemes order.
std::vector<ComparisonRow> CompareSchemes(ScenarioConfig const &config, std::size_t num_trials,
                                          unsigned threads = 1);

struct SweepRow
{
  std::size_t n      = 0;
  double      lambda = 0.0;
  double      A      = 0.0;
  double      v      = 0.0;
  double      bid_inflated  = 0.0;
  double      bid_deflated = 0.0;
};

struct SweepGrid
{
  std::vector<std::size_t> ns;
  std::vector<double>      lambdas;
  std::vector<double>      uppers;
  /// Explicit valuations; when empty each A gets `points` evenly spaced values on [0, A].
  std::vector<double> vs;
  std::size_t         points = 71;
};

/// Bid table over the Cartesian product of the grid, n outermost and v innermost.
std::vector<SweepRow> SweepBids(SweepGrid const &grid);

/// The three bid-curve families: lambda varying (n = 3, A = 70), n varying
/// (lambda = 0.5, A = 70) and A varying (n = 3, lambda = 0.5), each on v = 0, 1, ..., A.
std::vector<SweepRow> DefaultSweep();

}  // namespace allpay
