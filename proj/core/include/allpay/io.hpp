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

#include "allpay/sim_harness.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace allpay {

/// Fixed six-decimal rendering used by every table and CLI value.
std::string FormatFixed(double value);

/// Parses a JSON scenario/config record. Unknown keys and bad values raise
/// ValidationError; missing keys keep their defaults.
ScenarioConfig ParseScenarioConfig(std::string_view json_text);
ScenarioConfig LoadScenarioConfig(std::string const &path);
std::string    ScenarioConfigToJson(ScenarioConfig const &config);

std::string ReportToJson(OutcomeReport const &report);

/// trial,scheme,total_profit,served_sets,winner_ids,winner_bids,winner_payments
void WriteComparisonCsv(std::ostream &out, std::vector<ComparisonRow> const &rows);

/// n,lambda,A,v,bid_inflated,bid_deflated
void WriteSweepCsv(std::ostream &out, std::vector<SweepRow> const &rows);

/// One row per trial with every scheme's profit and served count, followed by
/// `mean` and `std` rows.
void WriteTrialsCsv(std::ostream &out, std::vector<TrialRecord> const &records);

}  // namespace allpay
