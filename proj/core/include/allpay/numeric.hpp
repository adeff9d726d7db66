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

#include <functional>

namespace allpay::numeric {

struct QuadratureOptions
{
  double abs_tolerance = 1e-9;
  int    max_depth     = 50;
};

/// Adaptive Simpson integration of `f` over [a, b]. Returns 0 for an empty interval.
double IntegrateAdaptiveSimpson(std::function<double(double)> const &f, double a, double b,
                                QuadratureOptions const &options = {});

struct BisectionOptions
{
  double abs_tolerance  = 1e-9;
  int    max_iterations = 200;
};

struct BisectionResult
{
  double root;
  double residual;
  int    iterations;
};

/// Bisection on a bracket whose end points give values of opposite sign (or an exact zero).
/// Throws SolverFailure, quoting both end values, when the bracket has no sign change.
BisectionResult Bisect(std::function<double(double)> const &f, double lo, double hi,
                       BisectionOptions const &options = {});

}  // namespace allpay::numeric
