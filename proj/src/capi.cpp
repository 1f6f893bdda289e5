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

#include "combcontract.h"

#include <cstring>
#include <new>
#include <string>

#include "combcontract/errors.hpp"
#include "combcontract/hardness.hpp"
#include "combcontract/io.hpp"
#include "combcontract/objectives.hpp"
#include "combcontract/solvers.hpp"

struct cc_instance {
  combcontract::Instance inst;
};

namespace {

using namespace combcontract;

thread_local std::string g_last_error;

static_assert(static_cast<int>(ErrorCode::kInternal) + 1 == CC_INTERNAL_ERROR,
              "cc_status must mirror ErrorCode");

cc_status statusOf(ErrorCode code) {
  // ErrorCode and cc_status list the same failures in the same order.
  return static_cast<cc_status>(static_cast<int>(code) + 1);
}

template <class F>
cc_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return CC_OK;
  } catch (const ContractError& e) {
    g_last_error = e.what();
    return statusOf(e.code());
  } catch (const Json::exception& e) {
    g_last_error = std::string("JSON: ") + e.what();
    return CC_SCHEMA_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CC_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CC_UNKNOWN_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return CC_UNKNOWN_ERROR;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

Json parseJson(const char* text, const char* what) {
  need(text, what);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kSchemaError, std::string(what) + ": invalid JSON: " + e.what());
  }
}

// A bare word such as profit is accepted as well as JSON.
Objective objectiveArg(const char* text) {
  need(text, "objective");
  const std::string s(text);
  if (!s.empty() && (s.front() == '{' || s.front() == '"')) {
    return objectiveFromJson(parseJson(text, "objective"));
  }
  return objectiveFromJson(Json(s));
}

Rational rationalArg(const char* text, const char* what) {
  need(text, what);
  return Rational::parse(text);
}

HardnessSpec hardnessArg(const char* text) {
  Json j = parseJson(text, "params");
  if (!j.is_object()) fail(ErrorCode::kSchemaError, "params: expected an object");
  j["type"] = "hardness";
  if (!j.contains("hidden") && j.contains("n") && j["n"].is_number_integer()) {
    Json hidden = Json::array();
    for (int i = 0; i < j["n"].get<int>() / 2; ++i) hidden.push_back(i);
    j["hidden"] = hidden;
  }
  HardnessSpec spec = std::get<HardnessSpec>(rewardSpecFromJson(j, "/params"));
  spec = withDefaultEps(spec);
  validateHardnessSpec(spec);
  return spec;
}

SolveResult solveResultFromJson(const Json& j, const std::string& path) {
  SolveResult r;
  auto get = [&](const char* key) -> const Json& {
    if (!j.is_object() || !j.contains(key)) {
      fail(ErrorCode::kSchemaError, path + ": missing field '" + key + "'");
    }
    return j[key];
  };
  r.solver = get("solver").get<std::string>();
  r.contract = contractFromJson(get("contract"), path + "/contract");
  r.profile = profileFromJson(get("profile"), path + "/profile");
  r.value = rationalFromJson(get("value"), path + "/value");
  const Json& factor = get("certifiedFactor");
  if (!(factor.is_string() && factor.get<std::string>() == "exact")) {
    r.certifiedFactor = rationalFromJson(factor, path + "/certifiedFactor");
  }
  if (j.contains("queries")) {
    r.queries.value = j["queries"].value("value", std::uint64_t{0});
    r.queries.demand = j["queries"].value("demand", std::uint64_t{0});
  }
  return r;
}

SolveResult runSolver(const Instance& inst, const std::string& solver, const Objective& obj,
                      const Rational& budget, const char* eps, int enumCap) {
  std::string name = solver;
  const FunctionClass cls = inst.oracle().declaredClass();
  if (name == "auto") {
    if (cls == FunctionClass::kAdditive && obj.kind() != Objective::Kind::kCombo) {
      name = "additive-fptas";
    } else if (inst.numAgents() == 1 && obj.kind() == Objective::Kind::kProfit) {
      name = "single-agent-fptas";
    } else if (classAtLeast(cls, FunctionClass::kGrossSubstitutes)) {
      name = "gs-constant-factor";
    } else {
      name = "brute";
    }
  }
  auto epsArg = [&] {
    if (eps == nullptr) fail(ErrorCode::kInvalidEpsilon, name + " needs eps");
    return Rational::parse(eps);
  };
  if (name == "brute") {
    BruteOptions options;
    options.enumCap = enumCap;
    return bruteForceOpt(inst, budget, obj, options);
  }
  if (name == "additive-fptas") return additiveFptas(inst, budget, epsArg(), obj);
  if (name == "single-agent-fptas") {
    if (obj.kind() != Objective::Kind::kProfit) {
      fail(ErrorCode::kSolverMismatch, "the single-agent FPTAS optimizes profit only");
    }
    return singleAgentFptas(inst, budget, epsArg(), enumCap);
  }
  if (name == "gs-constant-factor") return gsConstantFactor(inst, budget, obj, enumCap);
  if (name == "max-reward-bounded") {
    if (obj.kind() != Objective::Kind::kReward) {
      fail(ErrorCode::kSolverMismatch, "max-reward-bounded optimizes reward only");
    }
    return maxRewardBoundedBrute(inst, budget, enumCap);
  }
  fail(ErrorCode::kInvalidArgument, "unknown solver '" + solver + "'");
}

}  // namespace

extern "C" {

const char* cc_version(void) { return "0.1.0"; }

const char* cc_status_name(cc_status status) {
  if (status == CC_OK) return "Ok";
  if (status == CC_UNKNOWN_ERROR) return "UnknownError";
  if (status > CC_OK && status < CC_UNKNOWN_ERROR) {
    return errorCodeName(static_cast<ErrorCode>(static_cast<int>(status) - 1)).data();
  }
  return "InvalidStatus";
}

const char* cc_last_error(void) { return g_last_error.c_str(); }

void cc_string_free(char* s) { std::free(s); }

cc_status cc_instance_from_json(const char* json, cc_instance** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    *out = new cc_instance{instanceFromJson(parseJson(json, "instance"))};
  });
}

cc_status cc_instance_to_json(const cc_instance* inst, char** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "out");
    *out = dup(serializeInstance(inst->inst));
  });
}

void cc_instance_free(cc_instance* inst) { delete inst; }

cc_status cc_instance_shape(const cc_instance* inst, int* num_agents, int* num_actions) {
  return guarded([&] {
    need(inst, "instance");
    if (num_agents != nullptr) *num_agents = inst->inst.numAgents();
    if (num_actions != nullptr) *num_actions = inst->inst.numActions();
  });
}

cc_status cc_instance_class(const cc_instance* inst, char** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "out");
    *out = dup(std::string(functionClassName(inst->inst.oracle().declaredClass())));
  });
}

cc_status cc_instance_queries(const cc_instance* inst, uint64_t* value, uint64_t* demand) {
  return guarded([&] {
    need(inst, "instance");
    const QueryCounts c = inst->inst.oracle().counts();
    if (value != nullptr) *value = c.value;
    if (demand != nullptr) *demand = c.demand;
  });
}

cc_status cc_instance_reset_queries(const cc_instance* inst) {
  return guarded([&] {
    need(inst, "instance");
    inst->inst.oracle().resetCounts();
  });
}

cc_status cc_solve(const cc_instance* inst, const char* solver, const char* objective,
                   const char* budget, const char* eps, int enum_cap, char** result_json) {
  return guarded([&] {
    need(inst, "instance");
    need(solver, "solver");
    need(result_json, "result_json");
    const SolveResult r = runSolver(inst->inst, solver, objectiveArg(objective),
                                    rationalArg(budget, "budget"), eps, enum_cap);
    *result_json = dup(solveResultToJson(r).dump());
  });
}

cc_status cc_single_agent_exact(const cc_instance* inst, int agent, const char* objective,
                                const char* budget, int enum_cap, char** result_json) {
  return guarded([&] {
    need(inst, "instance");
    need(result_json, "result_json");
    const SolveResult r = gsSingleAgentExact(inst->inst, agent, objectiveArg(objective),
                                             rationalArg(budget, "budget"), enum_cap);
    *result_json = dup(solveResultToJson(r).dump());
  });
}

cc_status cc_downsize(const cc_instance* inst, int m, const char* contract, const char* profile,
                      int enum_cap, char** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "out");
    const Contract alpha = contractFromJson(parseJson(contract, "contract"));
    const ActionProfile s = profileFromJson(parseJson(profile, "profile"));
    *out = dup(downsizeToJson(downsize(inst->inst, m, alpha, s, enum_cap)).dump());
  });
}

cc_status cc_verify_ne(const cc_instance* inst, const char* contract, const char* profile,
                       int enum_cap, char** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "out");
    const Json c = parseJson(contract, "contract");
    const ActionProfile s = profileFromJson(parseJson(profile, "profile"));
    Json result;
    if (c.is_object()) {
      const GeneralContract t = generalContractFromJson(c);
      result["nash"] = isNashGeneral(inst->inst, t, s, enum_cap);
      result["linearized"] = contractToJson(linearize(t));
      result["linearizedNash"] = isNash(inst->inst, linearize(t), s, enum_cap);
    } else {
      result = neCertificateToJson(checkNash(inst->inst, contractFromJson(c), s, enum_cap));
    }
    *out = dup(result.dump());
  });
}

cc_status cc_verify_best(const cc_instance* inst, const char* objective, int grid_denominator,
                         char** out) {
  return guarded([&] {
    need(inst, "instance");
    need(out, "out");
    BestOptions options;
    options.gridDenominator = grid_denominator;
    *out = dup(bestReportToJson(verifyBestProperties(objectiveArg(objective), inst->inst, options))
                   .dump());
  });
}

cc_status cc_hardness_instance(const char* params, cc_instance** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    *out = new cc_instance{buildHardness(hardnessArg(params))};
  });
}

cc_status cc_hardness_good_contract(const char* params, char** out) {
  return guarded([&] {
    need(out, "out");
    const auto [alpha, s] = goodContract(hardnessArg(params));
    Json j;
    j["contract"] = contractToJson(alpha);
    j["profile"] = profileToJson(s);
    *out = dup(j.dump());
  });
}

cc_status cc_gap_report(const char* params, char** out) {
  return guarded([&] {
    need(out, "out");
    const HardnessSpec spec = hardnessArg(params);
    Json j = gapReportToJson(verifyGapExhaustive(spec));
    j["eps"] = spec.eps.str();
    *out = dup(j.dump());
  });
}

cc_status cc_hardness_experiment(const char* params, const char* solver, int trials,
                                 uint64_t query_budget, uint64_t seed, char** summary_json,
                                 char** trials_csv, char** summary_csv) {
  return guarded([&] {
    need(solver, "solver");
    const HardnessSpec spec = hardnessArg(params);
    const std::string name(solver);
    HardnessSolver s;
    if (name == "random-guess") {
      s = randomGuessSolver();
    } else if (name == "query-search") {
      s = querySearchSolver();
    } else if (name == "cheating") {
      s = cheatingSolver();
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown experiment solver '" + name + "'");
    }
    const ExperimentReport r = adversaryExperiment(s, spec, trials, query_budget, seed);
    // Allocate everything before handing any of it out.
    std::string a = experimentSummaryToJson(r).dump();
    std::string b = experimentTrialsCsv(r);
    std::string c = experimentSummaryCsv(r);
    char* pa = summary_json != nullptr ? dup(a) : nullptr;
    char* pb = nullptr;
    char* pc = nullptr;
    try {
      if (trials_csv != nullptr) pb = dup(b);
      if (summary_csv != nullptr) pc = dup(c);
    } catch (...) {
      std::free(pa);
      std::free(pb);
      throw;
    }
    if (summary_json != nullptr) *summary_json = pa;
    if (trials_csv != nullptr) *trials_csv = pb;
    if (summary_csv != nullptr) *summary_csv = pc;
  });
}

cc_status cc_results_to_csv(const char* rows, char** csv) {
  return guarded([&] {
    need(csv, "csv");
    const Json j = parseJson(rows, "rows");
    if (!j.is_array()) fail(ErrorCode::kSchemaError, "rows: expected an array");
    std::vector<ReportRow> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string path = "/rows/" + std::to_string(k);
      const Json& row = j[k];
      if (!row.is_object() || !row.contains("result")) {
        fail(ErrorCode::kSchemaError, path + ": missing field 'result'");
      }
      ReportRow r;
      r.label = row.value("label", std::string());
      r.objective = row.value("objective", std::string());
      if (row.contains("budget")) r.budget = rationalFromJson(row["budget"], path + "/budget");
      if (row.contains("eps") && !row["eps"].is_null()) {
        r.eps = rationalFromJson(row["eps"], path + "/eps");
      }
      r.result = solveResultFromJson(row["result"], path + "/result");
      if (row.contains("reference") && !row["reference"].is_null()) {
        r.reference = rationalFromJson(row["reference"], path + "/reference");
      }
      out.push_back(std::move(r));
    }
    *csv = dup(emitReport(out));
  });
}

}  // extern "C"
