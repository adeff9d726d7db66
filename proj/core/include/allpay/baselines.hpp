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

namespace allpay {

/// Comparison schemes: minimal readings of greedy first-price allocation, a
/// one-round Vickrey sale per executor, and a monopoly posted price.
///
/// Every scheme walks executors by capacity descending and only offers an
/// executor to users whose requirement fits its capacity. Users bid their
/// valuation. Profit is the sum over sales of payment minus executor cost.

enum class CostRule
{
  kOwnValuation,       ///< cost = the executor's own valuation
  kFractionOfCapacity  ///< cost = alpha * capacity
};

struct BaselineConfig
{
  CostRule cost_rule = CostRule::kFractionOfCapacity;
  double   alpha     = 0.5;
};

/// Throws ValidationError unless alpha lies in (0, 1] when it is used.
void Validate(BaselineConfig const &config);

double ExecutorCost(Executor const &executor, BaselineConfig const &config);

/// Highest remaining feasible user wins each executor and pays its valuation.
OutcomeReport GreedyAllocate(Scenario const &scenario, BaselineConfig const &config = {});

/// Same winners as greedy; the winner pays the second-highest feasible valuation
/// in the executor's pool, or its own valuation when it is alone in the pool.
OutcomeReport PmmraAllocate(Scenario const &scenario, BaselineConfig const &config = {});

/// Revenue-maximizing posted price against a uniform law on [0, upper]: upper / 2.
double MonopolyPrice(double upper);

/// Each executor posts MonopolyPrice of the largest A in its feasible pool. The
/// highest-valuation feasible user with valuation >= price buys at that price.
OutcomeReport StackelbergAllocate(Scenario const &scenario, BaselineConfig const &config = {});

}  // namespace allpay
