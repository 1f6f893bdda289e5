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

#include "combcontract/io.hpp"

#include <fstream>
#include <sstream>
#include <type_traits>

#include "combcontract/errors.hpp"

namespace combcontract {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  fail(ErrorCode::kSchemaError, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, std::string("missing field '") + key + "'");
  return *it;
}

int intFrom(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) schema(path, "integer out of range");
  return static_cast<int>(v);
}

std::string stringFrom(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

const Json& arrayFrom(const Json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array");
  return j;
}

std::vector<Rational> rationalsFrom(const Json& j, const std::string& path) {
  std::vector<Rational> out;
  std::size_t k = 0;
  for (const Json& x : arrayFrom(j, path)) {
    out.push_back(rationalFromJson(x, path + "/" + std::to_string(k++)));
  }
  return out;
}

std::vector<int> intsFrom(const Json& j, const std::string& path) {
  std::vector<int> out;
  std::size_t k = 0;
  for (const Json& x : arrayFrom(j, path)) out.push_back(intFrom(x, path + "/" + std::to_string(k++)));
  return out;
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(r.str());
  return out;
}

std::string csvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os.precision(12);
  os << r.toDouble();
  return os.str();
}

std::string idList(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(ids[k]);
  }
  return out;
}

}  // namespace

Rational rationalFromJson(const Json& j, const std::string& path) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  schema(path, "expected a rational string \"p/q\"");
}

Json rationalToJson(const Rational& r) { return r.str(); }

RewardSpec rewardSpecFromJson(const Json& j, const std::string& path) {
  const std::string type = stringFrom(field(j, "type", path), path + "/type");
  if (type == "additive") {
    return AdditiveSpec{rationalsFrom(field(j, "weights", path), path + "/weights")};
  }
  if (type == "unit_demand") {
    return UnitDemandSpec{rationalsFrom(field(j, "weights", path), path + "/weights")};
  }
  if (type == "uniform_k_demand") {
    return UniformKDemandSpec{intFrom(field(j, "groundSize", path), path + "/groundSize"),
                              intFrom(field(j, "k", path), path + "/k"),
                              rationalFromJson(field(j, "v", path), path + "/v")};
  }
  if (type == "assignment") {
    AssignmentSpec spec;
    std::size_t k = 0;
    for (const Json& row : arrayFrom(field(j, "values", path), path + "/values")) {
      spec.values.push_back(rationalsFrom(row, path + "/values/" + std::to_string(k++)));
    }
    return spec;
  }
  if (type == "coverage") {
    CoverageSpec spec;
    spec.elementWeights = rationalsFrom(field(j, "elementWeights", path), path + "/elementWeights");
    std::size_t k = 0;
    for (const Json& row : arrayFrom(field(j, "sets", path), path + "/sets")) {
      spec.sets.push_back(intsFrom(row, path + "/sets/" + std::to_string(k++)));
    }
    return spec;
  }
  if (type == "hardness") {
    HardnessSpec spec;
    spec.n = intFrom(field(j, "n", path), path + "/n");
    spec.budget = rationalFromJson(field(j, "budget", path), path + "/budget");
    if (j.contains("approximation")) {
      spec.approximation = rationalFromJson(j["approximation"], path + "/approximation");
    }
    if (j.contains("eps")) spec.eps = rationalFromJson(j["eps"], path + "/eps");
    spec.hidden = intsFrom(field(j, "hidden", path), path + "/hidden");
    return spec;
  }
  if (type == "explicit") {
    ExplicitSpec spec;
    spec.groundSize = intFrom(field(j, "groundSize", path), path + "/groundSize");
    spec.table = rationalsFrom(field(j, "table", path), path + "/table");
    if (j.contains("class")) {
      try {
        spec.declared = parseFunctionClass(stringFrom(j["class"], path + "/class"));
      } catch (const ContractError& e) {
        schema(path + "/class", e.what());
      }
    }
    return spec;
  }
  schema(path + "/type", "unknown reward type '" + type + "'");
}

Json rewardSpecToJson(const RewardSpec& spec) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        Json j;
        if constexpr (std::is_same_v<T, AdditiveSpec>) {
          j["type"] = "additive";
          j["weights"] = rationals(s.weights);
        } else if constexpr (std::is_same_v<T, UnitDemandSpec>) {
          j["type"] = "unit_demand";
          j["weights"] = rationals(s.weights);
        } else if constexpr (std::is_same_v<T, UniformKDemandSpec>) {
          j["type"] = "uniform_k_demand";
          j["groundSize"] = s.groundSize;
          j["k"] = s.k;
          j["v"] = s.v.str();
        } else if constexpr (std::is_same_v<T, AssignmentSpec>) {
          j["type"] = "assignment";
          j["values"] = Json::array();
          for (const auto& row : s.values) j["values"].push_back(rationals(row));
        } else if constexpr (std::is_same_v<T, CoverageSpec>) {
          j["type"] = "coverage";
          j["elementWeights"] = rationals(s.elementWeights);
          j["sets"] = s.sets;
        } else if constexpr (std::is_same_v<T, HardnessSpec>) {
          j["type"] = "hardness";
          j["n"] = s.n;
          j["budget"] = s.budget.str();
          j["approximation"] = s.approximation.str();
          j["eps"] = s.eps.str();
          j["hidden"] = s.hidden;
        } else {
          j["type"] = "explicit";
          j["groundSize"] = s.groundSize;
          j["class"] = std::string(functionClassName(s.declared));
          j["table"] = rationals(s.table);
        }
        return j;
      },
      spec);
}

Instance instanceFromJson(const Json& j) {
  if (!j.is_object()) schema("", "expected an object");
  RewardSpec spec = rewardSpecFromJson(field(j, "reward", ""), "/reward");
  if (auto* h = std::get_if<HardnessSpec>(&spec)) {
    *h = withDefaultEps(*h);
    if (!j.contains("actions")) return buildHardness(*h);
  }
  const int n = intFrom(field(j, "numAgents", ""), "/numAgents");
  std::vector<Action> actions;
  std::size_t k = 0;
  for (const Json& a : arrayFrom(field(j, "actions", ""), "/actions")) {
    const std::string path = "/actions/" + std::to_string(k++);
    actions.push_back(Action{intFrom(field(a, "id", path), path + "/id"),
                             intFrom(field(a, "owner", path), path + "/owner"),
                             rationalFromJson(field(a, "cost", path), path + "/cost")});
  }
  Instance inst(n, std::move(actions), makeOracle(spec));
  validateInstance(inst);
  return inst;
}

Json instanceToJson(const Instance& inst) {
  Json j;
  j["numAgents"] = inst.numAgents();
  j["actions"] = Json::array();
  for (const Action& a : inst.actions()) {
    j["actions"].push_back(Json{{"id", a.id}, {"owner", a.owner}, {"cost", a.cost.str()}});
  }
  j["reward"] = rewardSpecToJson(inst.oracle().spec());
  return j;
}

Instance parseInstance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kSchemaError, std::string("invalid JSON: ") + e.what());
  }
  return instanceFromJson(j);
}

std::string serializeInstance(const Instance& inst) { return instanceToJson(inst).dump(2); }

Objective objectiveFromJson(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parseObjectiveName(j.get<std::string>());
    } catch (const ContractError& e) {
      fail(ErrorCode::kInvalidObjective, path + ": " + e.what());
    }
  }
  const std::string type = stringFrom(field(j, "type", path), path + "/type");
  if (type != "combo") return objectiveFromJson(Json(type), path + "/type");
  std::vector<Rational> weights;
  std::vector<Objective> parts;
  std::size_t k = 0;
  for (const Json& term : arrayFrom(field(j, "terms", path), path + "/terms")) {
    const std::string tp = path + "/terms/" + std::to_string(k++);
    if (!term.is_array() || term.size() != 2) schema(tp, "expected [weight, objective]");
    weights.push_back(rationalFromJson(term[0], tp + "/0"));
    parts.push_back(objectiveFromJson(term[1], tp + "/1"));
  }
  return Objective::combo(std::move(weights), std::move(parts));
}

Json objectiveToJson(const Objective& obj) {
  Json j;
  switch (obj.kind()) {
    case Objective::Kind::kProfit: j["type"] = "profit"; return j;
    case Objective::Kind::kReward: j["type"] = "reward"; return j;
    case Objective::Kind::kWelfare: j["type"] = "welfare"; return j;
    case Objective::Kind::kCombo: break;
  }
  j["type"] = "combo";
  j["terms"] = Json::array();
  for (std::size_t k = 0; k < obj.parts().size(); ++k) {
    j["terms"].push_back(Json::array({obj.weights()[k].str(), objectiveToJson(obj.parts()[k])}));
  }
  return j;
}

Json contractToJson(const Contract& c) { return rationals(c.alpha); }

Contract contractFromJson(const Json& j, const std::string& path) {
  return Contract{rationalsFrom(j, path)};
}

Json profileToJson(ActionProfile s) { return s.toVector(); }

ActionProfile profileFromJson(const Json& j, const std::string& path) {
  ActionProfile s;
  std::size_t k = 0;
  for (int id : intsFrom(j, path)) {
    if (id < 0 || id >= kMaxIds) schema(path + "/" + std::to_string(k), "action id out of range");
    s.insert(id);
    ++k;
  }
  return s;
}

GeneralContract generalContractFromJson(const Json& j, const std::string& path) {
  return GeneralContract{rationalsFrom(field(j, "onFailure", path), path + "/onFailure"),
                         rationalsFrom(field(j, "onSuccess", path), path + "/onSuccess")};
}

Json solveResultToJson(const SolveResult& r) {
  Json j;
  j["solver"] = r.solver;
  j["contract"] = contractToJson(r.contract);
  j["totalShare"] = r.contract.total().str();
  j["profile"] = profileToJson(r.profile);
  j["value"] = r.value.str();
  j["certifiedFactor"] = r.certifiedFactor ? Json(r.certifiedFactor->str()) : Json("exact");
  j["queries"] = Json{{"value", r.queries.value}, {"demand", r.queries.demand}};
  return j;
}

Json neCertificateToJson(const NeCertificate& cert) {
  Json j;
  j["nash"] = cert.nash;
  j["profile"] = profileToJson(cert.profile);
  j["deviatingAgent"] = cert.deviatingAgent ? Json(*cert.deviatingAgent) : Json(nullptr);
  j["agents"] = Json::array();
  for (const AgentCheck& a : cert.agents) {
    j["agents"].push_back(Json{{"agent", a.agent},
                               {"utility", a.utility.str()},
                               {"bestUtility", a.bestUtility.str()},
                               {"bestDeviation", profileToJson(a.bestDeviation)}});
  }
  return j;
}

Json bestReportToJson(const BestReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["equilibriumDomain"] = r.equilibriumDomain;
  j["contracts"] = r.contracts;
  j["checks"] = r.checks;
  if (!r.pass) {
    Json cx;
    cx["property"] = r.property;
    if (r.alpha) cx["alpha"] = contractToJson(*r.alpha);
    if (r.alpha2) cx["alpha2"] = contractToJson(*r.alpha2);
    cx["s"] = profileToJson(r.s);
    cx["s2"] = profileToJson(r.s2);
    if (r.agent) cx["agent"] = *r.agent;
    j["counterexample"] = cx;
  }
  return j;
}

Json downsizeToJson(const DownsizeResult& r) {
  Json j;
  j["contract"] = contractToJson(r.contract);
  j["profile"] = profileToJson(r.profile);
  j["singleAgent"] = r.singleAgent ? Json(*r.singleAgent) : Json(nullptr);
  j["paidAgents"] = r.paid.toVector();
  j["rewardBefore"] = r.rewardBefore.str();
  j["rewardAfter"] = r.rewardAfter.str();
  j["paymentBefore"] = r.paymentBefore.str();
  j["paymentAfter"] = r.paymentAfter.str();
  j["rewardGuarantee"] = r.rewardGuarantee;
  j["paymentGuarantee"] = r.paymentGuarantee;
  return j;
}

Json gapReportToJson(const GapReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["bound"] = r.bound.str();
  j["maxOtherValue"] = r.maxOtherValue.str();
  j["maxOtherProfile"] = profileToJson(r.maxOtherProfile);
  j["violation"] = r.violation ? profileToJson(*r.violation) : Json(nullptr);
  j["gapRatio"] = r.gapRatio.str();
  j["profiles"] = r.profiles;
  j["feasibleProfiles"] = r.feasibleProfiles;
  return j;
}

Json experimentSummaryToJson(const ExperimentReport& r) {
  Json j;
  j["solver"] = r.solver;
  j["n"] = r.n;
  j["budget"] = r.budget.str();
  j["approximation"] = r.approximation.str();
  j["eps"] = r.eps.str();
  j["trials"] = r.trials;
  j["queryBudget"] = r.queryBudget;
  j["successes"] = r.successes;
  j["baselineProb"] = r.baselineProb.str();
  j["meanApproxRatio"] = r.meanApproxRatio.str();
  return j;
}

std::string emitReport(const std::vector<ReportRow>& rows) {
  std::string out =
      "label,solver,objective,budget,eps,value,value_decimal,total_share,total_share_decimal,"
      "profile,certified_factor,value_queries,demand_queries,reference,ratio,ratio_decimal\n";
  for (const ReportRow& row : rows) {
    const SolveResult& r = row.result;
    std::string ratio;
    std::string ratioDec;
    if (row.reference && r.value.sign() > 0) {
      const Rational q = *row.reference / r.value;
      ratio = q.str();
      ratioDec = decimal(q);
    }
    const Rational total = r.contract.total();
    out += csvEscape(row.label) + ',' + csvEscape(r.solver) + ',' + csvEscape(row.objective) + ',' +
           row.budget.str() + ',' + (row.eps ? row.eps->str() : "") + ',' + r.value.str() + ',' +
           decimal(r.value) + ',' + total.str() + ',' + decimal(total) + ',' +
           idList(r.profile.toVector()) + ',' +
           (r.certifiedFactor ? r.certifiedFactor->str() : "exact") + ',' +
           std::to_string(r.queries.value) + ',' + std::to_string(r.queries.demand) + ',' +
           (row.reference ? row.reference->str() : "") + ',' + ratio + ',' + ratioDec + '\n';
  }
  return out;
}

std::string experimentTrialsCsv(const ExperimentReport& r) {
  std::string out =
      "trial,solver,n,B,K,eps,hidden,success,budget_exceeded,approx_ratio,approx_ratio_decimal,"
      "value_queries,demand_queries\n";
  for (const ExperimentTrial& t : r.rows) {
    out += std::to_string(t.trial) + ',' + csvEscape(r.solver) + ',' + std::to_string(r.n) + ',' +
           r.budget.str() + ',' + r.approximation.str() + ',' + r.eps.str() + ',' +
           idList(t.hidden) + ',' + (t.success ? "1" : "0") + ',' +
           (t.budgetExceeded ? "1" : "0") + ',' + t.approxRatio.str() + ',' +
           decimal(t.approxRatio) + ',' + std::to_string(t.valueQueries) + ',' +
           std::to_string(t.demandQueries) + '\n';
  }
  return out;
}

std::string experimentSummaryCsv(const ExperimentReport& r) {
  return "n,B,K,eps,trials,queryBudget,successes,baselineProb,baselineProb_decimal,"
         "meanApproxRatio,meanApproxRatio_decimal\n" +
         std::to_string(r.n) + ',' + r.budget.str() + ',' + r.approximation.str() + ',' +
         r.eps.str() + ',' + std::to_string(r.trials) + ',' + std::to_string(r.queryBudget) + ',' +
         std::to_string(r.successes) + ',' + r.baselineProb.str() + ',' +
         decimal(r.baselineProb) + ',' + r.meanApproxRatio.str() + ',' +
         decimal(r.meanApproxRatio) + '\n';
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

}  // namespace combcontract
