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

#include "allpay/types.hpp"

#include <algorithm>

namespace allpay {

std::size_t OutcomeReport::ServedCount() const
{
  if (scheme == Scheme::kAllPay)
  {
    return static_cast<std::size_t>(
        std::count_if(sets.begin(), sets.end(), [](AuctionSet const &s) { return s.served; }));
  }
  return assignments.size();
}

std::string_view ToString(Scheme scheme) noexcept
{
  switch (scheme)
  {
  case Scheme::kAllPay:
    return "allpay";
  case Scheme::kGreedy:
    return "greedy";
  case Scheme::kPmmra:
    return "pmmra";
  case Scheme::kStackelberg:
    return "stackelberg";
  }
  return "unknown";
}

std::string_view ToString(ServiceRule rule) noexcept
{
  return rule == ServiceRule::kAvgReserve ? "avg_reserve" : "avg_valuation";
}

std::string_view ToString(MatchKey key) noexcept
{
  return key == MatchKey::kValuation ? "valuation" : "reserve";
}

std::string_view ToString(BidRule rule) noexcept
{
  return rule == BidRule::kInflated ? "inflated" : "deflated";
}

}  // namespace allpay
