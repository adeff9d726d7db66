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

#include "allpay/auction_core.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace allpay {

using BidderId   = std::uint32_t;
using ExecutorId = std::uint32_t;

/// One end user inside an auction: C(v, b, r, m) plus its resource requirement
/// and the upper bound A of its valuation law.
struct Bidder
{
  BidderId id               = 0;
  double   valuation        = 0.0;
  double   bid              = 0.0;
  double   personal_reserve = 0.0;
  bool     served           = false;
  double   requirement      = 0.0;
  double   upper            = 0.0;
};

struct Executor
{
  ExecutorId id            = 0;
  double     capacity      = 0.0;
  double     own_valuation = 0.0;
};

enum class ServiceRule
{
  kAvgReserve,   ///< bid sum must reach the mean of the members' reserves
  kAvgValuation  ///< bid sum must reach the mean of the members' valuations
};

enum class MatchKey
{
  kValuation,  ///< highest-valuation winner gets the largest executor
  kReserve     ///< highest-reserve winner gets the largest executor
};

enum class Scheme
{
  kAllPay,
  kGreedy,
  kPmmra,
  kStackelberg
};

inline constexpr Scheme kAllSchemes[] = {Scheme::kAllPay, Scheme::kGreedy, Scheme::kPmmra,
                                         Scheme::kStackelberg};

/// An end user as it appears in a scenario, before any auction runs.
struct EndUser
{
  BidderId id          = 0;
  double   upper       = 0.0;  ///< A of the user's uniform valuation law
  double   valuation   = 0.0;
  double   requirement = 0.0;
};

/// Everything one allocation round needs.
struct Scenario
{
  std::vector<EndUser>  users;
  std::vector<Executor> executors;
  double                lambda        = 0.5;
  BidRule               bid_rule      = BidRule::kInflated;
  ServiceRule           service_rule  = ServiceRule::kAvgReserve;
  MatchKey              match_key     = MatchKey::kValuation;
  std::size_t           gate_set_size = 3;  ///< n used to evaluate each user's minimum valuation
};

struct Assignment
{
  BidderId   bidder   = 0;
  ExecutorId executor = 0;
  double     bid      = 0.0;
  double     payment  = 0.0;
  double     cost     = 0.0;  ///< executor cost charged against the payment (baselines only)
};

struct AuctionSet
{
  std::vector<Bidder>     members;
  double                  epsilon   = 0.0;
  double                  reserve_R = 0.0;  ///< service threshold actually applied
  double                  bid_sum   = 0.0;
  std::optional<BidderId> winner;
  bool                    served = false;

  /// Profit this set adds to the system: bid_sum - reserve_R when served, else 0.
  double Contribution() const noexcept
  {
    return served ? bid_sum - reserve_R : 0.0;
  }
};

struct OutcomeReport
{
  Scheme                  scheme = Scheme::kAllPay;
  std::vector<Assignment> assignments;
  std::vector<AuctionSet> sets;     ///< all-pay only: every kept set, ordered by anchor valuation
  std::vector<BidderId>   gated;    ///< all-pay only: users below their minimum valuation
  std::vector<BidderId>   deleted;  ///< all-pay only: users dropped by the minimum set size
  double                  total_profit   = 0.0;
  double                  total_payments = 0.0;

  std::size_t ServedCount() const;
};

std::string_view ToString(Scheme scheme) noexcept;
std::string_view ToString(ServiceRule rule) noexcept;
std::string_view ToString(MatchKey key) noexcept;
std::string_view ToString(BidRule rule) noexcept;

}  // namespace allpay
