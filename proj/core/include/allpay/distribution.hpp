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

namespace allpay {

enum class DistributionKind
{
  kUniform
};

/// Private-value law shared by every bidder of a set.
///
/// Only the uniform law on [support_lo, upper] ships. cdf() clamps its
/// argument to the support, so callers never see values outside [0, 1].
class ValuationDistribution
{
public:
  /// Uniform on [support_lo, upper]; throws InvalidParameter unless 0 <= support_lo < upper.
  static ValuationDistribution Uniform(double upper, double support_lo = 0.0);

  DistributionKind kind() const noexcept
  {
    return kind_;
  }
  double upper() const noexcept
  {
    return upper_;
  }
  double support_lo() const noexcept
  {
    return support_lo_;
  }
  double width() const noexcept
  {
    return upper_ - support_lo_;
  }

  double Cdf(double x) const noexcept;
  double Pdf(double x) const noexcept;
  double Quantile(double p) const noexcept;

  bool Contains(double x) const noexcept
  {
    return x >= support_lo_ && x <= upper_;
  }

private:
  ValuationDistribution(DistributionKind kind, double upper, double support_lo)
    : kind_{kind}
    , upper_{upper}
    , support_lo_{support_lo}
  {}

  DistributionKind kind_;
  double           upper_;
  double           support_lo_;
};

}  // namespace allpay
