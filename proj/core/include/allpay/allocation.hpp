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

#include "allpay/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace allpay {

/// Width bound for a set: (max - min) / k over all valuations.
double Epsilon(std::span<double const> valuations, std::size_t k);

struct PartitionResult
{
  /// Each kept set as indices into the sorted input, ascending.
  std::vector<std::vector<std::size_t>> kept;
  /// Indices that fell into groups smaller than the minimum size.
  std::vector<std::size_t> deleted;
};

/// Anchor-based grouping of ascending valuations.
///
/// A value joins the open group iff it lies within `epsilon` of the group's
/// smallest member; otherwise the group is closed and a new one is anchored at
/// that value. Closed groups with fewer than `min_size` members are deleted.
PartitionResult Partition(std::span<double const> sorted_valuations, double epsilon,
                          std::size_t min_size = 3);

/// Applies the service condition to a set whose bids and reserves are already
/// filled in. Every member pays its bid; only the top bidder (lowest id on ties)
/// is marked served.
AuctionSet DecideService(std::vector<Bidder> members, double epsilon, ServiceRule rule);

struct Match
{
  BidderId   bidder;
  ExecutorId executor;
};

/// Pairs winners with executors rank to rank: executors by capacity descending,
/// winners by `key` descending. Ties fall back to ascending id. Leftovers on
/// either side stay unmatched.
std::vector<Match> MatchWinners(std::span<Bidder const> winners,
                                std::span<Executor const> executors,
                                MatchKey                  key = MatchKey::kValuation);

/// Runs the full all-pay pipeline on one scenario: minimum-valuation gate,
/// epsilon, partition, per-member bids and reserves (n = own set size), service
/// decision per set, winner-to-executor matching and total profit.
///
/// A served set whose winner finds no executor is reported as unserved and
/// contributes nothing. Deterministic for identical input.
OutcomeReport RunAuction(Scenario const &scenario);

/// Sum of bids over served sets minus the sum of their thresholds.
double TotalProfit(std::span<AuctionSet const> sets);

/// Expected revenue of one set of m equal-C bidders: m C / (1 - lambda / m).
double SetRevenue(std::size_t m, double lambda, double c);

struct PartitionGap
{
  double direct;       ///< revenue of the (n-1, n, n+1) split minus the (n, n, n) split
  double closed_form;  ///< 2 C lambda^2 / ((n-1-lambda)(n+1-lambda)(n-lambda))
};

/// Revenue gained by splitting 3n equal-C bidders unevenly, computed two ways.
PartitionGap ComputePartitionGap(std::size_t n, double lambda, double c);

}  // namespace allpay
