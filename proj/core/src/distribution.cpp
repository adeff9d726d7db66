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

#include "allpay/distribution.hpp"

#include "allpay/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace allpay {

ValuationDistribution ValuationDistribution::Uniform(double upper, double support_lo)
{
  if (!std::isfinite(upper) || !std::isfinite(support_lo) || support_lo < 0.0 ||
      !(support_lo < upper))
  {
    std::ostringstream msg;
    msg << "uniform support requires 0 <= lo < A, got lo=" << support_lo << " A=" << upper;
    throw InvalidParameter(msg.str());
  }
  return {DistributionKind::kUniform, upper, support_lo};
}

double ValuationDistribution::Cdf(double x) const noexcept
{
  return std::clamp((x - support_lo_) / width(), 0.0, 1.0);
}

double ValuationDistribution::Pdf(double x) const noexcept
{
  return Contains(x) ? 1.0 / width() : 0.0;
}

double ValuationDistribution::Quantile(double p) const noexcept
{
  return support_lo_ + std::clamp(p, 0.0, 1.0) * width();
}

}  // namespace allpay
