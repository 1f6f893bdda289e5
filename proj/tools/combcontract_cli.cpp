// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library through the C API only.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "combcontract.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Failure {
  std::string status;
  std::string message;
};

struct InstanceDeleter {
  void operator()(cc_instance* p) const { cc_instance_free(p); }
};
using InstancePtr = std::unique_ptr<cc_instance, InstanceDeleter>;

void check(cc_status s) {
  if (s != CC_OK) throw Failure{cc_status_name(s), cc_last_error()};
}

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  cc_string_free(s);
  return out;
}

std::string readAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"IoError", "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@file" reads the argument from a file.
std::string argText(const std::string& v) { return !v.empty() && v[0] == '@' ? readAll(v.substr(1)) : v; }

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Failure{"IoError", "cannot write '" + out + "'"};
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

InstancePtr loadInstance(const std::string& path) {
  cc_instance* raw = nullptr;
  check(cc_instance_from_json(readAll(path).c_str(), &raw));
  return InstancePtr(raw);
}

struct Config {
  std::string instance;
  std::string budget = "1";
  std::string hardnessBudget = "1/2";
  std::string eps = "1/10";
  std::string objective = "profit";
  std::uint64_t seed = 1;
  std::string out;
  int trials = 100;
  std::uint64_t queryBudget = 1000;
  int enumCap = 16;
  std::string forceSolver;
  std::string format = "json";
  bool compareBrute = false;
  // downsize / verify-ne
  std::string contract;
  std::string profile;
  int m = 6;
  int grid = 8;
  // hardness
  int n = 8;
  std::string approximation = "1";
  std::string hardnessEps;
  std::string hidden;
  std::string solver = "random-guess";
  std::string summaryOut;
};

std::string hardnessParams(const Config& c) {
  Json j;
  j["n"] = c.n;
  j["budget"] = c.hardnessBudget;
  j["approximation"] = c.approximation;
  if (!c.hardnessEps.empty()) j["eps"] = c.hardnessEps;
  if (!c.hidden.empty()) j["hidden"] = Json::parse(argText(c.hidden));
  return j.dump();
}

std::string solveOnce(const cc_instance* inst, const std::string& solver, const Config& c) {
  char* out = nullptr;
  check(cc_solve(inst, solver.c_str(), c.objective.c_str(), c.budget.c_str(), c.eps.c_str(),
                 c.enumCap, &out));
  return take(out);
}

void runSolve(const Config& c, bool brute) {
  InstancePtr inst = loadInstance(c.instance);
  const std::string solver = brute ? "brute" : (c.forceSolver.empty() ? "auto" : c.forceSolver);
  const std::string result = solveOnce(inst.get(), solver, c);
  if (c.format == "json") {
    emit(result, c.out);
    return;
  }
  Json row;
  row["label"] = c.instance;
  row["objective"] = c.objective;
  row["budget"] = c.budget;
  const Json parsed = Json::parse(result);
  if (parsed["certifiedFactor"] != "exact" && parsed["solver"] != "gs-constant-factor") {
    row["eps"] = c.eps;
  }
  row["result"] = parsed;
  if (c.compareBrute) {
    row["reference"] = Json::parse(solveOnce(inst.get(), "brute", c))["value"];
  }
  char* csv = nullptr;
  check(cc_results_to_csv(Json::array({row}).dump().c_str(), &csv));
  emit(take(csv), c.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted multi-agent contract design with combinatorial actions"};
  app.require_subcommand(1);
  Config c;

  auto addInstance = [&](CLI::App* sub) {
    sub->add_option("--instance", c.instance, "Instance JSON file")->required();
  };
  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "Budget B as p/q")->capture_default_str();
    sub->add_option("--out", c.out, "Output file (default stdout)");
    sub->add_option("--enum-cap", c.enumCap, "Enumeration cap")->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "Pick a solver by function class and objective");
  addInstance(solve);
  addCommon(solve);
  solve->add_option("--eps", c.eps, "Accuracy for the FPTAS solvers")->capture_default_str();
  solve->add_option("--objective", c.objective, "profit | reward | welfare | JSON")->capture_default_str();
  solve->add_option("--force-solver", c.forceSolver,
                    "brute | additive-fptas | single-agent-fptas | gs-constant-factor | "
                    "max-reward-bounded");
  solve->add_option("--format", c.format, "json | csv")->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));
  solve->add_flag("--compare-brute", c.compareBrute, "Add the exact optimum and ratio (csv)");
  solve->add_option("--seed", c.seed, "Unused; accepted for uniform batch scripts");

  CLI::App* brute = app.add_subcommand("brute", "Exact optimum by enumeration");
  addInstance(brute);
  addCommon(brute);
  brute->add_option("--objective", c.objective, "profit | reward | welfare | JSON")->capture_default_str();
  brute->add_option("--format", c.format, "json | csv")->capture_default_str()
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* down = app.add_subcommand("downsize", "Downsize a contract and equilibrium");
  addInstance(down);
  addCommon(down);
  down->add_option("--contract", c.contract, "JSON array of shares or @file")->required();
  down->add_option("--profile", c.profile, "JSON array of action ids or @file")->required();
  down->add_option("--m", c.m, "Downsizing parameter M >= 3")->capture_default_str();

  CLI::App* ne = app.add_subcommand("verify-ne", "Check a Nash equilibrium");
  addInstance(ne);
  addCommon(ne);
  ne->add_option("--contract", c.contract, "Shares, a general contract, or @file")->required();
  ne->add_option("--profile", c.profile, "JSON array of action ids or @file")->required();

  CLI::App* best = app.add_subcommand("verify-best", "Check the BEST properties of an objective");
  addInstance(best);
  best->add_option("--objective", c.objective, "profit | reward | welfare | JSON")->capture_default_str();
  best->add_option("--grid", c.grid, "Share grid denominator")->capture_default_str();
  best->add_option("--out", c.out, "Output file (default stdout)");

  auto addHardness = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of unit agents (even)")->capture_default_str();
    sub->add_option("--budget", c.hardnessBudget, "Budget B as p/q, in (0, 1)")->capture_default_str();
    sub->add_option("--approximation", c.approximation, "Approximation target K")->capture_default_str();
    sub->add_option("--eps", c.hardnessEps, "eps (default: the family default)");
    sub->add_option("--out", c.out, "Output file (default stdout)");
  };

  CLI::App* exp = app.add_subcommand("hardness-experiment", "Run the hidden-set experiment");
  addHardness(exp);
  exp->add_option("--solver", c.solver, "random-guess | query-search | cheating")->capture_default_str()
      ->check(CLI::IsMember({"random-guess", "query-search", "cheating"}));
  exp->add_option("--trials", c.trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
  exp->add_option("--query-budget", c.queryBudget, "Value queries per trial")->capture_default_str();
  exp->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  exp->add_option("--summary-out", c.summaryOut, "Summary CSV (default stderr)");

  CLI::App* gap = app.add_subcommand("gap-report", "Exhaustive gap check on the hidden-set family");
  addHardness(gap);
  gap->add_option("--hidden", c.hidden, "Hidden set as a JSON array (default first n/2)");

  CLI::App* good = app.add_subcommand("good-contract", "The hidden-set family's good contract");
  addHardness(good);
  good->add_option("--hidden", c.hidden, "Hidden set as a JSON array (default first n/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      runSolve(c, false);
    } else if (brute->parsed()) {
      runSolve(c, true);
    } else if (down->parsed()) {
      InstancePtr inst = loadInstance(c.instance);
      char* out = nullptr;
      check(cc_downsize(inst.get(), c.m, argText(c.contract).c_str(), argText(c.profile).c_str(),
                        c.enumCap, &out));
      emit(take(out), c.out);
    } else if (ne->parsed()) {
      InstancePtr inst = loadInstance(c.instance);
      char* out = nullptr;
      check(cc_verify_ne(inst.get(), argText(c.contract).c_str(), argText(c.profile).c_str(),
                         c.enumCap, &out));
      emit(take(out), c.out);
    } else if (best->parsed()) {
      InstancePtr inst = loadInstance(c.instance);
      char* out = nullptr;
      check(cc_verify_best(inst.get(), argText(c.objective).c_str(), c.grid, &out));
      emit(take(out), c.out);
    } else if (exp->parsed()) {
      char* trials = nullptr;
      char* summary = nullptr;
      check(cc_hardness_experiment(hardnessParams(c).c_str(), c.solver.c_str(), c.trials,
                                   c.queryBudget, c.seed, nullptr, &trials, &summary));
      emit(take(trials), c.out);
      const std::string s = take(summary);
      if (c.summaryOut.empty()) {
        std::cerr << s;
      } else {
        emit(s, c.summaryOut);
      }
    } else if (gap->parsed()) {
      char* out = nullptr;
      check(cc_gap_report(hardnessParams(c).c_str(), &out));
      emit(take(out), c.out);
    } else if (good->parsed()) {
      char* out = nullptr;
      check(cc_hardness_good_contract(hardnessParams(c).c_str(), &out));
      emit(take(out), c.out);
    }
  } catch (const Failure& f) {
    Json err;
    err["error"] = Json{{"status", f.status}, {"message", f.message}};
    std::cerr << err.dump() << '\n';
    return kExitDomain;
  } catch (const Json::exception& e) {
    Json err;
    err["error"] = Json{{"status", "SchemaError"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}
