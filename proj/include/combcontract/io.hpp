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

#ifndef COMBCONTRACT_IO_HPP_
#define COMBCONTRACT_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "combcontract/hardness.hpp"
#include "combcontract/instance.hpp"
#include "combcontract/objectives.hpp"
#include "combcontract/solvers.hpp"

namespace combcontract {

using Json = nlohmann::ordered_json;

// Schema problems throw kSchemaError with a JSON-pointer-like path in the
// message; malformed rationals throw kRationalParse.
Rational rationalFromJson(const Json& j, const std::string& path);
Json rationalToJson(const Rational& r);

RewardSpec rewardSpecFromJson(const Json& j, const std::string& path = "/reward");
Json rewardSpecToJson(const RewardSpec& spec);

// { "numAgents", "actions": [{"id","owner","cost"}], "reward": descriptor }.
// A hardness descriptor may omit numAgents and actions; the family's own
// costs are then used.
Instance instanceFromJson(const Json& j);
Json instanceToJson(const Instance& inst);
Instance parseInstance(const std::string& text);
std::string serializeInstance(const Instance& inst);

// "profit" or {"type": ..., "terms": [["p/q", objective], ...]}.
Objective objectiveFromJson(const Json& j, const std::string& path = "/objective");
Json objectiveToJson(const Objective& obj);

Json contractToJson(const Contract& c);
Contract contractFromJson(const Json& j, const std::string& path = "/contract");
Json profileToJson(ActionProfile s);
ActionProfile profileFromJson(const Json& j, const std::string& path = "/profile");
GeneralContract generalContractFromJson(const Json& j, const std::string& path = "/contract");

Json solveResultToJson(const SolveResult& r);
Json neCertificateToJson(const NeCertificate& cert);
Json bestReportToJson(const BestReport& r);
Json downsizeToJson(const DownsizeResult& r);
Json gapReportToJson(const GapReport& r);
Json experimentSummaryToJson(const ExperimentReport& r);

// One CSV row per solver run. `reference` is an exact optimum; the ratio
// column is reference / value.
struct ReportRow {
  std::string label;
  std::string objective;
  Rational budget;
  std::optional<Rational> eps;
  SolveResult result;
  std::optional<Rational> reference;
};
std::string emitReport(const std::vector<ReportRow>& rows);

// Per-trial rows of a hidden-set experiment.
std::string experimentTrialsCsv(const ExperimentReport& r);
// The one-row summary: n, B, K, eps, trials, queryBudget, successes,
// baselineProb, meanApproxRatio.
std::string experimentSummaryCsv(const ExperimentReport& r);

std::string readFile(const std::string& path);
void writeFile(const std::string& path, const std::string& text);

}  // namespace combcontract

#endif  // COMBCONTRACT_IO_HPP_
