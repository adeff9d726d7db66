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

#include "allpay/auction_core.hpp"

#include "allpay/errors.hpp"
#include "allpay/numeric.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace allpay {
namespace {

void RequireCount(std::size_t n, std::size_t minimum, char const *what)
{
  if (n < minimum)
  {
    std::ostringstream msg;
    msg << what << " requires n >= " << minimum << ", got " << n;
    throw InvalidParameter(msg.str());
  }
}

void RequireLambda(double lambda)
{
  if (!(lambda >= 0.0 && lambda <= 1.0))
  {
    std::ostringstream msg;
    msg << "lambda must lie in [0, 1], got " << lambda;
    throw InvalidParameter(msg.str());
  }
}

void RequireWithin(double x, double lo, double hi, char const *what)
{
  if (!(x >= lo && x <= hi))
  {
    std::ostringstream msg;
    msg << what << "=" << x << " outside [" << lo << ", " << hi << "]";
    throw DomainError(msg.str());
  }
}

bool HasClosedForm(ValuationDistribution const &dist)
{
  return dist.kind() == DistributionKind::kUniform && dist.support_lo() == 0.0;
}

// F^k with the base clamped so rounding never produces a negative base.
double CdfPower(ValuationDistribution const &dist, double t, std::size_t k)
{
  return std::pow(dist.Cdf(t), static_cast<double>(k));
}

// Integral of t dF^(n-1)(t) over [lo, hi].
double FirstOrderIntegral(ValuationDistribution const &dist, std::size_t n, double lo, double hi,
                          bool closed_form)
{
  if (n < 2 || !(hi > lo))
  {
    return 0.0;
  }

  double const nd = static_cast<double>(n);
  if (closed_form)
  {
    double const a = dist.upper();
    return (nd - 1.0) / nd * a * (std::pow(hi / a, nd) - std::pow(lo / a, nd));
  }

  auto const integrand = [&](double t) {
    return (nd - 1.0) * t * CdfPower(dist, t, n - 2) * dist.Pdf(t);
  };
  return numeric::IntegrateAdaptiveSimpson(integrand, lo, hi,
                                           {.abs_tolerance = 1e-9 * dist.upper() * nd});
}

double BidPrefactor(BidParams const &params)
{
  double const nd = static_cast<double>(params.n);
  switch (params.rule)
  {
  case BidRule::kInflated:
    return 1.0 / (1.0 - params.lambda / nd);
  case BidRule::kDeflated:
    return (nd - params.lambda) / nd;
  }
  return 1.0;
}

double Bid(ValuationDistribution const &dist, BidParams const &params, double v, bool closed_form)
{
  RequireCount(params.n, 1, "equilibrium bid");
  RequireLambda(params.lambda);
  if (!(params.v_min >= 0.0))
  {
    throw InvalidParameter("v_min must be nonnegative");
  }
  RequireWithin(v, params.v_min, dist.upper(), "valuation");

  if (params.n == 1)
  {
    if (params.rule == BidRule::kInflated && params.lambda == 1.0)
    {
      throw SingularParameter("inflated bid is singular for n = 1 with lambda = 1");
    }
    return 0.0;
  }

  return FirstOrderIntegral(dist, params.n, params.v_min, v, closed_form) * BidPrefactor(params);
}

}  // namespace

double WinProbability(ValuationDistribution const &dist, std::size_t n, double t)
{
  RequireCount(n, 1, "win probability");
  return CdfPower(dist, t, n - 1);
}

double EquilibriumBid(ValuationDistribution const &dist, BidParams const &params, double v)
{
  return Bid(dist, params, v, HasClosedForm(dist));
}

double EquilibriumBidByQuadrature(ValuationDistribution const &dist, BidParams const &params,
                                  double v)
{
  return Bid(dist, params, v, false);
}

double ExpectedPayoff(ValuationDistribution const &dist, BidParams const &params, double v,
                      double t, double reserve)
{
  RequireWithin(v, dist.support_lo(), dist.upper(), "valuation");
  RequireWithin(t, dist.support_lo(), dist.upper(), "report");
  RequireWithin(reserve, 0.0, dist.upper(), "reserve");

  double const bid  = EquilibriumBid(dist, params, t);
  double const gain = v * WinProbability(dist, params.n, t);

  if (reserve == 0.0)
  {
    double const nd = static_cast<double>(params.n);
    return gain - (1.0 - params.lambda) * bid - (nd - 1.0) / nd * params.lambda * bid;
  }
  return (1.0 - dist.Cdf(reserve)) * (gain - bid);
}

double ReserveResidual(ValuationDistribution const &dist, std::size_t n, double lambda, double v0,
                       double r)
{
  double const nd    = static_cast<double>(n);
  double const slope = nd * (nd - 1.0) / (nd - lambda);
  double const cdf   = dist.Cdf(r);
  return v0 * cdf - slope * (1.0 - cdf) * r;
}

ReserveResult OptimalReserve(ValuationDistribution const &dist, std::size_t n, double lambda,
                             double v0)
{
  if (!HasClosedForm(dist))
  {
    return OptimalReserveByBisection(dist, n, lambda, v0);
  }

  RequireCount(n, 2, "optimal reserve");
  RequireLambda(lambda);
  RequireWithin(v0, dist.support_lo(), dist.upper(), "tenderer valuation");

  double const nd     = static_cast<double>(n);
  double const r_star = dist.upper() - v0 * (nd - lambda) / (nd * (nd - 1.0));
  if (r_star < dist.support_lo())
  {
    std::ostringstream msg;
    msg << "optimal reserve " << r_star << " falls below the support";
    throw SolverFailure(msg.str());
  }
  return {r_star, ReserveMethod::kClosedForm, ReserveResidual(dist, n, lambda, v0, r_star)};
}

ReserveResult OptimalReserveByBisection(ValuationDistribution const &dist, std::size_t n,
                                        double lambda, double v0)
{
  RequireCount(n, 2, "optimal reserve");
  RequireLambda(lambda);
  RequireWithin(v0, dist.support_lo(), dist.upper(), "tenderer valuation");

  auto const residual = [&](double r) { return ReserveResidual(dist, n, lambda, v0, r); };

  // r = 0 always solves the condition trivially; start just inside the support
  // so the bracket isolates the nontrivial root.
  double const tolerance = 1e-9 * dist.width();
  double const left      = dist.support_lo() + 0.5 * tolerance;
  if (residual(left) >= 0.0 && residual(dist.upper()) > 0.0)
  {
    return {dist.support_lo(), ReserveMethod::kBisection, residual(dist.support_lo())};
  }

  auto const found = numeric::Bisect(residual, left, dist.upper(),
                                     {.abs_tolerance = tolerance, .max_iterations = 200});
  return {found.root, ReserveMethod::kBisection, found.residual};
}

double SetReserve(std::span<double const> reserves)
{
  if (reserves.empty())
  {
    throw InvalidParameter("set reserve of an empty set");
  }
  return std::accumulate(reserves.begin(), reserves.end(), 0.0) /
         static_cast<double>(reserves.size());
}

double ExpectedRevenue(ValuationDistribution const &dist, std::size_t n, double lambda, double r)
{
  RequireCount(n, 2, "expected revenue");
  RequireLambda(lambda);
  RequireWithin(r, dist.support_lo(), dist.upper(), "reserve");

  double const nd        = static_cast<double>(n);
  auto const   integrand = [&](double t) {
    double const cdf = dist.Cdf(t);
    return nd * (nd - 1.0) * (1.0 - cdf) * t * std::pow(cdf, nd - 2.0) * dist.Pdf(t);
  };
  double const integral = numeric::IntegrateAdaptiveSimpson(
      integrand, r, dist.upper(), {.abs_tolerance = 1e-9 * dist.upper()});
  return nd / (nd - lambda) * integral;
}

double ExpectedSurplus(ValuationDistribution const &dist, std::size_t n, double lambda, double r,
                       double v0)
{
  if (!(v0 >= 0.0))
  {
    throw InvalidParameter("tenderer valuation must be nonnegative");
  }
  return ExpectedRevenue(dist, n, lambda, r) + v0 * CdfPower(dist, r, n);
}

double MinValuation(std::size_t n, double lambda, double upper)
{
  RequireCount(n, 2, "minimum valuation");
  RequireLambda(lambda);
  if (!(upper > 0.0) || !std::isfinite(upper))
  {
    throw InvalidParameter("minimum valuation requires A > 0");
  }

  double const nd   = static_cast<double>(n);
  auto const   gate = [&](double v0) {
    return (nd - lambda) * (nd - 1.0) / nd * upper * std::pow(v0 / upper, nd) +
           v0 * (nd - lambda) / (nd * (nd - 1.0)) - upper;
  };

  double const at_upper = gate(upper);
  if (std::abs(at_upper) <= 1e-12 * upper)
  {
    return upper;
  }
  if (at_upper < 0.0)
  {
    std::ostringstream msg;
    msg << "no minimum valuation in (0, A] for n=" << n << " lambda=" << lambda << " A=" << upper
        << ": gate(A)=" << at_upper;
    throw SolverFailure(msg.str());
  }

  return numeric::Bisect(gate, 0.0, upper, {.abs_tolerance = 1e-9 * upper, .max_iterations = 200})
      .root;
}

}  // namespace allpay
