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

#include "allpay/numeric.hpp"

#include "allpay/errors.hpp"

#include <cmath>
#include <sstream>

namespace allpay::numeric {
namespace {

struct Panel
{
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double Simpson(double a, double b, double fa, double fm, double fb)
{
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double Refine(std::function<double(double)> const &f, Panel const &p, double tolerance, int depth)
{
  double const lm    = 0.5 * (p.a + p.m);
  double const rm    = 0.5 * (p.m + p.b);
  double const flm   = f(lm);
  double const frm   = f(rm);
  double const left  = Simpson(p.a, p.m, p.fa, flm, p.fm);
  double const right = Simpson(p.m, p.b, p.fm, frm, p.fb);
  double const delta = left + right - p.whole;

  if (depth <= 0 || std::abs(delta) <= 15.0 * tolerance)
  {
    return left + right + delta / 15.0;
  }

  return Refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tolerance, depth - 1) +
         Refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tolerance, depth - 1);
}

}  // namespace

double IntegrateAdaptiveSimpson(std::function<double(double)> const &f, double a, double b,
                                QuadratureOptions const &options)
{
  if (!(b > a))
  {
    return 0.0;
  }

  double const m  = 0.5 * (a + b);
  double const fa = f(a);
  double const fm = f(m);
  double const fb = f(b);

  // Split once up front so an integrand that happens to be symmetric about the
  // midpoint cannot satisfy the stopping rule on the first panel.
  double const lm  = 0.5 * (a + m);
  double const rm  = 0.5 * (m + b);
  double const flm = f(lm);
  double const frm = f(rm);

  double const tolerance = 0.5 * options.abs_tolerance;
  return Refine(f, {a, lm, m, fa, flm, fm, Simpson(a, m, fa, flm, fm)}, tolerance,
                options.max_depth) +
         Refine(f, {m, rm, b, fm, frm, fb, Simpson(m, b, fm, frm, fb)}, tolerance,
                options.max_depth);
}

BisectionResult Bisect(std::function<double(double)> const &f, double lo, double hi,
                       BisectionOptions const &options)
{
  double f_lo = f(lo);
  double f_hi = f(hi);

  if (f_lo == 0.0)
  {
    return {lo, 0.0, 0};
  }
  if (f_hi == 0.0)
  {
    return {hi, 0.0, 0};
  }
  if (std::signbit(f_lo) == std::signbit(f_hi))
  {
    std::ostringstream msg;
    msg << "no sign change on [" << lo << ", " << hi << "]: f(lo)=" << f_lo << ", f(hi)=" << f_hi;
    throw SolverFailure(msg.str());
  }

  int iteration = 0;
  while (iteration < options.max_iterations && (hi - lo) > options.abs_tolerance)
  {
    ++iteration;
    double const mid   = 0.5 * (lo + hi);
    double const f_mid = f(mid);
    if (f_mid == 0.0)
    {
      return {mid, 0.0, iteration};
    }
    if (std::signbit(f_mid) == std::signbit(f_lo))
    {
      lo   = mid;
      f_lo = f_mid;
    }
    else
    {
      hi   = mid;
      f_hi = f_mid;
    }
  }

  double const root = 0.5 * (lo + hi);
  return {root, f(root), iteration};
}

}  // namespace allpay::numeric
