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

#include "allpay/distribution.hpp"

#include <cstddef>
#include <span>

namespace allpay {

/// Which closed form prices the equilibrium bid.
///
/// kInflated divides the integral by (1 - lambda/n) and is the default. kDeflated multiplies
/// it by (n - lambda)/n, which is the uniform closed form as printed alongside the
/// minimum-valuation condition.
enum class BidRule
{
  kInflated,
  kDeflated
};

struct BidParams
{
  std::size_t n      = 2;
  double      lambda = 0.0;
  BidRule     rule   = BidRule::kInflated;
  double      v_min  = 0.0;
};

enum class ReserveMethod
{
  kClosedForm,
  kBisection
};

struct ReserveResult
{
  double        r_star   = 0.0;
  ReserveMethod method   = ReserveMethod::kClosedForm;
  double        residual = 0.0;
};

/// Probability that a bidder reporting `t` beats the other n - 1 bidders: F(t)^(n-1).
double WinProbability(ValuationDistribution const &dist, std::size_t n, double t);

/// Equilibrium bid of a bidder with valuation `v`.
///
/// Uniform laws anchored at zero use the exact antiderivative; every other law
/// integrates t dF^(n-1)(t) from v_min to v numerically. n = 1 bids zero.
double EquilibriumBid(ValuationDistribution const &dist, BidParams const &params, double v);

/// Same as EquilibriumBid but always integrates numerically. Used to cross-check
/// the closed form.
double EquilibriumBidByQuadrature(ValuationDistribution const &dist, BidParams const &params,
                                  double v);

/// Expected payoff of a bidder with valuation `v` that reports `t`.
///
/// With reserve == 0 the payment splits into (1 - lambda) b + ((n-1)/n) lambda b.
/// With reserve > 0 the payoff is scaled by the probability 1 - F(reserve) that
/// the auction is held.
double ExpectedPayoff(ValuationDistribution const &dist, BidParams const &params, double v,
                      double t, double reserve);

/// Residual of the first-order condition for the tenderer's reserve:
/// v0 F(r) - n (n-1) / (n - lambda) (1 - F(r)) r.
double ReserveResidual(ValuationDistribution const &dist, std::size_t n, double lambda, double v0,
                       double r);

/// Optimal reserve for a tenderer valuing the resource at `v0`. Uniform laws on
/// [0, A] use the closed form, anything else falls back to bisection.
ReserveResult OptimalReserve(ValuationDistribution const &dist, std::size_t n, double lambda,
                             double v0);

/// Optimal reserve found by bisection on ReserveResidual over the support, to
/// 1e-9 of the support width.
ReserveResult OptimalReserveByBisection(ValuationDistribution const &dist, std::size_t n,
                                        double lambda, double v0);

/// Set-level reserve: mean of the members' optimal reserves.
double SetReserve(std::span<double const> reserves);

/// Expected income of the tenderer from n all-pay bidders under reserve `r`.
double ExpectedRevenue(ValuationDistribution const &dist, std::size_t n, double lambda, double r);

/// ExpectedRevenue plus the value v0 F(r)^n the tenderer keeps when nobody clears `r`.
double ExpectedSurplus(ValuationDistribution const &dist, std::size_t n, double lambda, double r,
                       double v0);

/// Critical valuation below which an end user should not bid, for a uniform law on [0, upper].
///
/// Root of (n-lambda)(n-1) v^n / (n A^(n-1)) + v (n-lambda) / (n (n-1)) - A on (0, A].
/// Throws SolverFailure when no root exists in that interval.
double MinValuation(std::size_t n, double lambda, double upper);

}  // namespace allpay
