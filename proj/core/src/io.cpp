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

#include "allpay/io.hpp"

#include "allpay/errors.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace allpay {
namespace {

using nlohmann::json;

// Round to the six decimals the text outputs carry, so JSON and CSV agree.
double Rounded(double value)
{
  return std::round(value * 1e6) / 1e6;
}

template <typename T>
std::string JoinFixed(std::vector<T> const &values)
{
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    if (i > 0)
    {
      out += ';';
    }
    if constexpr (std::is_floating_point_v<T>)
    {
      out += FormatFixed(values[i]);
    }
    else
    {
      out += std::to_string(values[i]);
    }
  }
  return out;
}

BidRule ParseBidRule(std::string const &s)
{
  if (s == "inflated")
  {
    return BidRule::kInflated;
  }
  if (s == "deflated")
  {
    return BidRule::kDeflated;
  }
  throw ValidationError("bid_rule must be inflated or deflated, got '" + s + "'");
}

ServiceRule ParseServiceRule(std::string const &s)
{
  if (s == "avg_reserve")
  {
    return ServiceRule::kAvgReserve;
  }
  if (s == "avg_valuation")
  {
    return ServiceRule::kAvgValuation;
  }
  throw ValidationError("service_rule must be avg_reserve or avg_valuation, got '" + s + "'");
}

MatchKey ParseMatchKey(std::string const &s)
{
  if (s == "valuation")
  {
    return MatchKey::kValuation;
  }
  if (s == "reserve")
  {
    return MatchKey::kReserve;
  }
  throw ValidationError("match_key must be valuation or reserve, got '" + s + "'");
}

void RejectUnknownKeys(json const &object, std::set<std::string> const &known,
                       std::string const &where)
{
  for (auto const &[key, value] : object.items())
  {
    if (!known.contains(key))
    {
      throw ValidationError("unknown field '" + key + "' in " + where);
    }
  }
}

BaselineConfig ParseBaseline(json const &j)
{
  RejectUnknownKeys(j, {"cost_rule", "alpha"}, "baseline");
  BaselineConfig config;
  if (j.contains("cost_rule"))
  {
    auto const rule = j.at("cost_rule").get<std::string>();
    if (rule == "own_valuation")
    {
      config.cost_rule = CostRule::kOwnValuation;
    }
    else if (rule == "fraction_of_capacity")
    {
      config.cost_rule = CostRule::kFractionOfCapacity;
    }
    else
    {
      throw ValidationError("baseline.cost_rule must be own_valuation or fraction_of_capacity");
    }
  }
  if (j.contains("alpha"))
  {
    config.alpha = j.at("alpha").get<double>();
  }
  return config;
}

std::vector<EndUser> ParseUsers(json const &j)
{
  if (!j.is_array())
  {
    throw ValidationError("eus must be an array");
  }
  std::vector<EndUser> users;
  for (std::size_t i = 0; i < j.size(); ++i)
  {
    auto const &entry = j[i];
    RejectUnknownKeys(entry, {"A", "valuation", "requirement"}, "eus[" + std::to_string(i) + "]");
    if (!entry.contains("A") || !entry.contains("valuation"))
    {
      throw ValidationError("eus[" + std::to_string(i) + "] needs A and valuation");
    }
    EndUser user;
    user.id          = static_cast<BidderId>(i);
    user.upper       = entry.at("A").get<double>();
    user.valuation   = entry.at("valuation").get<double>();
    user.requirement = entry.value("requirement", user.valuation);
    users.push_back(user);
  }
  return users;
}

json SetToJson(AuctionSet const &set)
{
  json members = json::array();
  for (auto const &m : set.members)
  {
    members.push_back({{"id", m.id},
                       {"valuation", Rounded(m.valuation)},
                       {"A", Rounded(m.upper)},
                       {"bid", Rounded(m.bid)},
                       {"reserve", Rounded(m.personal_reserve)},
                       {"served", m.served}});
  }
  return {{"members", members},
          {"epsilon", Rounded(set.epsilon)},
          {"reserve_R", Rounded(set.reserve_R)},
          {"bid_sum", Rounded(set.bid_sum)},
          {"winner", set.winner ? json(*set.winner) : json(nullptr)},
          {"served", set.served},
          {"contribution", Rounded(set.Contribution())}};
}

}  // namespace

std::string FormatFixed(double value)
{
  // Avoid printing "-0.000000" for tiny negatives produced by rounding.
  if (std::abs(value) < 5e-7)
  {
    value = 0.0;
  }
  return fmt::format("{:.6f}", value);
}

ScenarioConfig ParseScenarioConfig(std::string_view json_text)
{
  json j;
  try
  {
    j = json::parse(json_text);
  }
  catch (json::parse_error const &e)
  {
    throw ValidationError(std::string{"scenario is not valid JSON: "} + e.what());
  }
  if (!j.is_object())
  {
    throw ValidationError("scenario must be a JSON object");
  }

  RejectUnknownKeys(j,
                    {"num_eus", "num_ecs", "lambda", "A_choices", "capacities",
                     "executor_valuations", "bid_rule", "service_rule", "match_key", "seed",
                     "baseline", "eus"},
                    "scenario");

  ScenarioConfig config;
  try
  {
    if (j.contains("eus"))
    {
      config.users   = ParseUsers(j.at("eus"));
      config.num_eus = config.users->size();
    }
    if (j.contains("num_eus"))
    {
      config.num_eus = j.at("num_eus").get<std::size_t>();
    }
    config.lambda = j.value("lambda", config.lambda);
    if (j.contains("A_choices"))
    {
      config.A_choices = j.at("A_choices").get<std::vector<double>>();
    }
    if (j.contains("capacities"))
    {
      config.capacities = j.at("capacities").get<std::vector<double>>();
    }
    if (j.contains("executor_valuations"))
    {
      config.executor_valuations = j.at("executor_valuations").get<std::vector<double>>();
    }
    if (j.contains("num_ecs") && j.at("num_ecs").get<std::size_t>() != config.capacities.size())
    {
      throw ValidationError("num_ecs must equal the length of capacities");
    }
    if (j.contains("bid_rule"))
    {
      config.bid_rule = ParseBidRule(j.at("bid_rule").get<std::string>());
    }
    if (j.contains("service_rule"))
    {
      config.service_rule = ParseServiceRule(j.at("service_rule").get<std::string>());
    }
    if (j.contains("match_key"))
    {
      config.match_key = ParseMatchKey(j.at("match_key").get<std::string>());
    }
    if (j.contains("seed"))
    {
      config.seed = j.at("seed").get<std::uint64_t>();
    }
    if (j.contains("baseline"))
    {
      config.baseline = ParseBaseline(j.at("baseline"));
    }
  }
  catch (json::exception const &e)
  {
    throw ValidationError(std::string{"scenario field has the wrong type: "} + e.what());
  }

  Validate(config);
  return config;
}

ScenarioConfig LoadScenarioConfig(std::string const &path)
{
  std::ifstream in{path};
  if (!in)
  {
    throw ValidationError("cannot open scenario file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseScenarioConfig(buffer.str());
}

std::string ScenarioConfigToJson(ScenarioConfig const &config)
{
  json j{{"num_eus", config.num_eus},
         {"num_ecs", config.num_ecs()},
         {"lambda", config.lambda},
         {"A_choices", config.A_choices},
         {"capacities", config.capacities},
         {"bid_rule", ToString(config.bid_rule)},
         {"service_rule", ToString(config.service_rule)},
         {"match_key", ToString(config.match_key)},
         {"seed", config.seed},
         {"baseline",
          {{"cost_rule", config.baseline.cost_rule == CostRule::kOwnValuation
                             ? "own_valuation"
                             : "fraction_of_capacity"},
           {"alpha", config.baseline.alpha}}}};
  if (!config.executor_valuations.empty())
  {
    j["executor_valuations"] = config.executor_valuations;
  }
  if (config.users)
  {
    json users = json::array();
    for (auto const &u : *config.users)
    {
      users.push_back({{"A", u.upper}, {"valuation", u.valuation}, {"requirement", u.requirement}});
    }
    j["eus"] = users;
  }
  return j.dump(2);
}

std::string ReportToJson(OutcomeReport const &report)
{
  json assignments = json::array();
  for (auto const &a : report.assignments)
  {
    assignments.push_back({{"bidder", a.bidder},
                           {"executor", a.executor},
                           {"bid", Rounded(a.bid)},
                           {"payment", Rounded(a.payment)},
                           {"cost", Rounded(a.cost)}});
  }

  json j{{"scheme", ToString(report.scheme)},
         {"total_profit", Rounded(report.total_profit)},
         {"total_payments", Rounded(report.total_payments)},
         {"served", report.ServedCount()},
         {"assignments", assignments}};

  if (report.scheme == Scheme::kAllPay)
  {
    json sets = json::array();
    for (auto const &s : report.sets)
    {
      sets.push_back(SetToJson(s));
    }
    j["sets"]    = sets;
    j["gated"]   = report.gated;
    j["deleted"] = report.deleted;
  }
  return j.dump(2);
}

void WriteComparisonCsv(std::ostream &out, std::vector<ComparisonRow> const &rows)
{
  out << "trial,scheme,total_profit,served_sets,winner_ids,winner_bids,winner_payments\n";
  for (auto const &row : rows)
  {
    out << row.trial << ',' << ToString(row.scheme) << ',' << FormatFixed(row.total_profit) << ','
        << row.served_sets << ',' << JoinFixed(row.winner_ids) << ',' << JoinFixed(row.winner_bids)
        << ',' << JoinFixed(row.winner_payments) << '\n';
  }
}

void WriteSweepCsv(std::ostream &out, std::vector<SweepRow> const &rows)
{
  out << "n,lambda,A,v,bid_inflated,bid_deflated\n";
  for (auto const &row : rows)
  {
    out << row.n << ',' << FormatFixed(row.lambda) << ',' << FormatFixed(row.A) << ','
        << FormatFixed(row.v) << ',' << FormatFixed(row.bid_inflated) << ','
        << FormatFixed(row.bid_deflated) << '\n';
  }
}

void WriteTrialsCsv(std::ostream &out, std::vector<TrialRecord> const &records)
{
  out << "trial";
  for (auto const scheme : kAllSchemes)
  {
    out << ',' << ToString(scheme) << "_profit";
  }
  for (auto const scheme : kAllSchemes)
  {
    out << ',' << ToString(scheme) << "_served";
  }
  out << '\n';

  for (auto const &record : records)
  {
    out << record.trial;
    for (auto const scheme : kAllSchemes)
    {
      out << ',' << FormatFixed(record.Get(scheme).total_profit);
    }
    for (auto const scheme : kAllSchemes)
    {
      out << ',' << record.Get(scheme).ServedCount();
    }
    out << '\n';
  }

  auto const summaries = Summarize(records);
  out << "mean";
  for (auto const &s : summaries)
  {
    out << ',' << FormatFixed(s.mean_profit);
  }
  for (auto const &s : summaries)
  {
    out << ',' << FormatFixed(s.mean_served);
  }
  out << "\nstd";
  for (auto const &s : summaries)
  {
    out << ',' << FormatFixed(s.std_profit);
  }
  for (std::size_t i = 0; i < summaries.size(); ++i)
  {
    out << ',';
  }
  out << '\n';
}

}  // namespace allpay
