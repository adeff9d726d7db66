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

#include "cli.hpp"

#include "allpay/allocation.hpp"
#include "allpay/auction_core.hpp"
#include "allpay/baselines.hpp"
#include "allpay/errors.hpp"
#include "allpay/io.hpp"
#include "allpay/sim_harness.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

namespace allpay::cli {
namespace {

struct Options
{
  std::string output;
  std::string format = "csv";

  // bid / reserve / minval
  std::size_t n      = 0;
  double      lambda = 0.0;
  double      upper  = 0.0;
  double      v      = 0.0;
  double      v_min  = 0.0;
  double      v0     = 0.0;
  std::string rule   = "inflated";
  std::string method = "closed_form";

  // allocate / simulate / compare
  std::string                  scenario_path;
  std::string                  config_path;
  std::string                  scheme = "allpay";
  std::size_t                  trial  = 0;
  std::size_t                  trials = 1;
  std::optional<std::uint64_t> seed;
  unsigned                     threads = 0;

  // sweep
  std::vector<std::size_t> sweep_ns;
  std::vector<double>      sweep_lambdas;
  std::vector<double>      sweep_uppers;
  std::size_t              points = 0;
};

std::string Scalar(Options const &o, char const *key, double value)
{
  if (o.format == "json")
  {
    return std::string{"{\""} + key + "\": " + FormatFixed(value) + "}\n";
  }
  return FormatFixed(value) + "\n";
}

// ALLPAY_THREADS caps whatever --threads asked for (0 = all cores).
unsigned ThreadBudget(unsigned requested)
{
  unsigned threads = requested;
  if (char const *env = std::getenv("ALLPAY_THREADS"); env != nullptr && *env != '\0')
  {
    unsigned long cap = 0;
    try
    {
      cap = std::stoul(env);
    }
    catch (std::exception const &)
    {
      throw ValidationError(std::string{"ALLPAY_THREADS must be a positive integer, got '"} + env +
                            "'");
    }
    if (cap == 0)
    {
      throw ValidationError("ALLPAY_THREADS must be a positive integer");
    }
    unsigned const hw = std::max(1u, std::thread::hardware_concurrency());
    threads           = static_cast<unsigned>(std::min<unsigned long>(threads == 0 ? hw : threads, cap));
  }
  return threads;
}

ScenarioConfig ConfigFor(Options const &o)
{
  ScenarioConfig config = o.config_path.empty() ? ScenarioConfig{} : LoadScenarioConfig(o.config_path);
  if (o.seed)
  {
    config.seed = *o.seed;
  }
  return config;
}

std::vector<Scheme> SchemesFor(std::string const &name)
{
  if (name == "all")
  {
    return {std::begin(kAllSchemes), std::end(kAllSchemes)};
  }
  for (auto const scheme : kAllSchemes)
  {
    if (ToString(scheme) == name)
    {
      return {scheme};
    }
  }
  throw ValidationError("unknown scheme '" + name + "'");
}

std::string RunBid(Options const &o)
{
  auto const dist = ValuationDistribution::Uniform(o.upper);
  BidParams const params{.n      = o.n,
                         .lambda = o.lambda,
                         .rule   = o.rule == "deflated" ? BidRule::kDeflated : BidRule::kInflated,
                         .v_min  = o.v_min};
  return Scalar(o, "bid", EquilibriumBid(dist, params, o.v));
}

std::string RunReserve(Options const &o)
{
  auto const dist   = ValuationDistribution::Uniform(o.upper);
  auto const result = o.method == "bisection" ? OptimalReserveByBisection(dist, o.n, o.lambda, o.v0)
                                              : OptimalReserve(dist, o.n, o.lambda, o.v0);
  return Scalar(o, "r_star", result.r_star);
}

std::string RunMinval(Options const &o)
{
  return Scalar(o, "v0", MinValuation(o.n, o.lambda, o.upper));
}

std::string RunAllocate(Options const &o)
{
  auto const config   = LoadScenarioConfig(o.scenario_path);
  auto const scenario = GenerateScenario(config, o.trial);
  auto const all      = RunAllSchemes(scenario, config.baseline);

  std::vector<OutcomeReport> chosen;
  for (auto const scheme : SchemesFor(o.scheme))
  {
    chosen.push_back(all[static_cast<std::size_t>(scheme)]);
  }

  std::ostringstream out;
  if (o.format == "json")
  {
    if (chosen.size() == 1)
    {
      out << ReportToJson(chosen.front()) << '\n';
    }
    else
    {
      out << "[\n";
      for (std::size_t i = 0; i < chosen.size(); ++i)
      {
        out << ReportToJson(chosen[i]) << (i + 1 < chosen.size() ? ",\n" : "\n");
      }
      out << "]\n";
    }
    return out.str();
  }

  TrialRecord record;
  record.trial    = o.trial;
  record.outcomes = all;
  std::vector<ComparisonRow> rows;
  for (auto const &row : ToComparisonRows({record}))
  {
    if (std::any_of(chosen.begin(), chosen.end(),
                    [&](OutcomeReport const &r) { return r.scheme == row.scheme; }))
    {
      rows.push_back(row);
    }
  }
  WriteComparisonCsv(out, rows);
  return out.str();
}

std::string RunSimulate(Options const &o)
{
  auto const records = RunTrials(ConfigFor(o), o.trials, ThreadBudget(o.threads));
  std::ostringstream out;
  WriteTrialsCsv(out, records);
  return out.str();
}

std::string RunCompare(Options const &o)
{
  auto const rows = CompareSchemes(ConfigFor(o), o.trials, ThreadBudget(o.threads));
  std::ostringstream out;
  WriteComparisonCsv(out, rows);
  return out.str();
}

std::string RunSweep(Options const &o)
{
  std::vector<SweepRow> rows;
  if (o.sweep_ns.empty() && o.sweep_lambdas.empty() && o.sweep_uppers.empty() && o.points == 0)
  {
    rows = DefaultSweep();
  }
  else
  {
    SweepGrid grid;
    grid.ns      = o.sweep_ns.empty() ? std::vector<std::size_t>{3} : o.sweep_ns;
    grid.lambdas = o.sweep_lambdas.empty() ? std::vector<double>{0.5} : o.sweep_lambdas;
    grid.uppers  = o.sweep_uppers.empty() ? std::vector<double>{70.0} : o.sweep_uppers;
    grid.points  = o.points == 0 ? 71 : o.points;
    rows         = SweepBids(grid);
  }
  std::ostringstream out;
  WriteSweepCsv(out, rows);
  return out.str();
}

}  // namespace

int Dispatch(std::span<std::string const> args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"All-pay auction pricing for edge offloading", "allpay"};
  app.require_subcommand(1);

  Options o;
  auto const add_common = [&](CLI::App *sub) {
    sub->add_option("-o,--output", o.output, "Write the artifact to this file instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };

  auto *bid = app.add_subcommand("bid", "Equilibrium bid of one bidder");
  bid->add_option("--n", o.n, "Bidders in the set")->required();
  bid->add_option("--lambda", o.lambda, "Weight in [0, 1]")->required();
  bid->add_option("--A", o.upper, "Upper bound of the uniform valuation law")->required();
  bid->add_option("--v", o.v, "Valuation")->required();
  bid->add_option("--vmin", o.v_min, "Exit valuation (lower integration bound)");
  bid->add_option("--rule", o.rule, "Bid closed form")->check(CLI::IsMember({"inflated", "deflated"}));
  add_common(bid);

  auto *reserve = app.add_subcommand("reserve", "Optimal reserve r* for a tenderer valuation");
  reserve->add_option("--n", o.n, "Bidders in the set")->required();
  reserve->add_option("--lambda", o.lambda, "Weight in [0, 1]")->required();
  reserve->add_option("--A", o.upper, "Upper bound of the uniform valuation law")->required();
  reserve->add_option("--v0", o.v0, "Tenderer valuation")->required();
  reserve->add_option("--method", o.method, "Solver")
      ->check(CLI::IsMember({"closed_form", "bisection"}));
  add_common(reserve);

  auto *minval = app.add_subcommand("minval", "Critical minimum valuation v0");
  minval->add_option("--n", o.n, "Bidders in the set")->required();
  minval->add_option("--lambda", o.lambda, "Weight in [0, 1]")->required();
  minval->add_option("--A", o.upper, "Upper bound of the uniform valuation law")->required();
  add_common(minval);

  auto *allocate = app.add_subcommand("allocate", "Run one allocation round on a scenario file");
  allocate->add_option("--scenario", o.scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
  allocate->add_option("--scheme", o.scheme, "allpay, greedy, pmmra, stackelberg or all")
      ->check(CLI::IsMember({"allpay", "greedy", "pmmra", "stackelberg", "all"}));
  allocate->add_option("--trial", o.trial, "Trial index used when users are drawn");
  add_common(allocate);

  auto const add_trials = [&](CLI::App *sub) {
    sub->add_option("--config", o.config_path, "Scenario config JSON (defaults when omitted)")
        ->check(CLI::ExistingFile);
    sub->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed overriding the config");
    sub->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    add_common(sub);
  };
  auto *simulate = app.add_subcommand("simulate", "Per-trial profits with mean/std rows");
  add_trials(simulate);
  auto *compare = app.add_subcommand("compare", "Per-(trial, scheme) comparison table");
  add_trials(compare);

  auto *sweep = app.add_subcommand("sweep", "Bid curve table (defaults to the three standard families)");
  sweep->add_option("--n", o.sweep_ns, "Set sizes");
  sweep->add_option("--lambda", o.sweep_lambdas, "Weights");
  sweep->add_option("--A", o.sweep_uppers, "Upper bounds");
  sweep->add_option("--points", o.points, "Evenly spaced valuations per A");
  add_common(sweep);

  std::vector<std::string> argv{args.rbegin(), args.rend()};
  try
  {
    app.parse(argv);
  }
  catch (CLI::CallForHelp const &)
  {
    out << app.help();
    return kOk;
  }
  catch (CLI::CallForAllHelp const &)
  {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  }
  catch (CLI::ParseError const &e)
  {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInvalid;
  }

  try
  {
    std::string artifact;
    if (bid->parsed())
    {
      artifact = RunBid(o);
    }
    else if (reserve->parsed())
    {
      artifact = RunReserve(o);
    }
    else if (minval->parsed())
    {
      artifact = RunMinval(o);
    }
    else if (allocate->parsed())
    {
      artifact = RunAllocate(o);
    }
    else if (simulate->parsed())
    {
      artifact = RunSimulate(o);
    }
    else if (compare->parsed())
    {
      artifact = RunCompare(o);
    }
    else if (sweep->parsed())
    {
      artifact = RunSweep(o);
    }

    if (o.output.empty())
    {
      out << artifact;
    }
    else
    {
      std::ofstream file{o.output, std::ios::binary};
      if (!file)
      {
        err << "error: cannot write '" << o.output << "'\n";
        return kInvalid;
      }
      file << artifact;
    }
    return kOk;
  }
  catch (SolverFailure const &e)
  {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  }
  catch (Error const &e)
  {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace allpay::cli
