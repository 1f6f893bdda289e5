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

#include <gtest/gtest.h>

#include "combcontract/errors.hpp"
#include "combcontract/hardness.hpp"
#include "combcontract/io.hpp"
#include "combcontract/solvers.hpp"
#include "support.hpp"

using namespace combcontract;

namespace {

ErrorCode codeOf(const std::function<void()>& f, std::string* message = nullptr) {
  try {
    f();
  } catch (const ContractError& e) {
    if (message) *message = e.what();
    return e.code();
  }
  return ErrorCode::kInternal;
}

const char* kMinimal = R"({"numAgents": 1,
  "actions": [{"id": 0, "owner": 0, "cost": "1/4"}],
  "reward": {"type": "additive", "weights": ["1/2"]}})";

// Same values on every subset, same costs and owners.
void expectSameInstance(const Instance& a, const Instance& b) {
  ASSERT_EQ(a.numAgents(), b.numAgents());
  ASSERT_EQ(a.numActions(), b.numActions());
  for (ActionId x = 0; x < a.numActions(); ++x) {
    ASSERT_EQ(a.cost(x), b.cost(x));
    ASSERT_EQ(a.owner(x), b.owner(x));
  }
  ASSERT_EQ(cctest::valueTable(a), cctest::valueTable(b));
  ASSERT_EQ(a.oracle().declaredClass(), b.oracle().declaredClass());
}

}  // namespace

TEST(Json, Minimal) {
  Instance inst = parseInstance(kMinimal);
  EXPECT_EQ(inst.numAgents(), 1);
  EXPECT_EQ(inst.cost(0), Rational(1, 4));
  EXPECT_EQ(inst.oracle().value(ActionSet{0}), Rational(1, 2));
}

TEST(Json, Errors) {
  std::string msg;
  std::string text = kMinimal;
  text.replace(text.find("\"1/4\""), 5, "\"1/0\"");
  EXPECT_EQ(codeOf([&] { parseInstance(text); }), ErrorCode::kRationalParse);

  EXPECT_EQ(codeOf([&] { parseInstance(R"({"numAgents": 1, "actions": [{"id": 0, "owner": 0}],
                                           "reward": {"type": "additive", "weights": ["1/2"]}})"); }, &msg),
            ErrorCode::kSchemaError);
  EXPECT_NE(msg.find("/actions/0: missing field 'cost'"), std::string::npos) << msg;

  EXPECT_EQ(codeOf([&] { parseInstance(R"({"numAgents": 1, "actions": [{"id": 0, "owner": 0, "cost": "0"}],
                                           "reward": {"type": "xos"}})"); }, &msg),
            ErrorCode::kSchemaError);
  EXPECT_NE(msg.find("/reward"), std::string::npos) << msg;
  EXPECT_EQ(codeOf([&] { parseInstance("{not json"); }), ErrorCode::kSchemaError);
  EXPECT_EQ(codeOf([&] { parseInstance(R"({"numAgents": 1, "actions": [{"id": 0, "owner": 0, "cost": "-1/4"}],
                                           "reward": {"type": "additive", "weights": ["1/2"]}})"); }),
            ErrorCode::kNegativeCost);
}

TEST(Json, HardnessDescriptor) {
  Instance inst = parseInstance(R"({"reward": {"type": "hardness", "n": 4, "budget": "1/2",
                                               "eps": "1/100", "hidden": [0, 1]}})");
  const HardnessSpec spec{4, Rational(1, 2), Rational(1), Rational(1, 100), {0, 1}};
  expectSameInstance(inst, buildHardness(spec));
  Instance dflt = parseInstance(R"({"reward": {"type": "hardness", "n": 6, "budget": "1/2", "hidden": [1, 3, 5]}})");
  EXPECT_EQ(dflt.numActions(), 8);
  EXPECT_EQ(codeOf([] { parseInstance(R"({"reward": {"type": "hardness", "n": 5, "budget": "1/2", "hidden": [1, 3]}})"); }),
            ErrorCode::kOddN);
}

TEST(Json, RoundTrip) {
  cctest::Rng rng(1);
  std::vector<Instance> corpus;
  for (int t = 0; t < 12; ++t) corpus.push_back(cctest::randomGs(rng, t, 3, 7));
  for (int t = 0; t < 4; ++t) corpus.push_back(cctest::randomCoverage(rng));
  for (int t = 0; t < 4; ++t) {
    const int m = static_cast<int>(cctest::uniformInt(rng, 1, 5));
    corpus.push_back(cctest::withOwners(1, std::vector<int>(m, 0), std::vector<Rational>(m, Rational(1, 9)),
                                        makeExplicit(m, cctest::randomMonotoneTable(rng, m))));
  }
  corpus.push_back(cctest::withOwners(1, {0, 0, 0}, {0, 0, 0}, makeUniformKDemand(3, 2, Rational(1, 4))));
  corpus.push_back(buildHardness(HardnessSpec{4, Rational(1, 2), Rational(1), Rational(1, 100), {0, 1}}));
  for (const Instance& inst : corpus) {
    const std::string text = serializeInstance(inst);
    const Instance back = parseInstance(text);
    expectSameInstance(inst, back);
    EXPECT_EQ(serializeInstance(back), text);
  }
}

TEST(Json, ObjectiveAndContract) {
  EXPECT_EQ(objectiveFromJson(Json("profit")), Objective::profit());
  const Objective combo = objectiveFromJson(Json::parse(R"({"type": "combo", "terms": [["1/2", "profit"], ["1/2", "reward"]]})"));
  EXPECT_EQ(combo, Objective::combo({Rational(1, 2), Rational(1, 2)}, {Objective::profit(), Objective::reward()}));
  EXPECT_EQ(objectiveFromJson(objectiveToJson(combo)), combo);
  EXPECT_EQ(codeOf([] { objectiveFromJson(Json::parse(R"({"type": "combo", "terms": [["1/3", "profit"]]})")); }),
            ErrorCode::kInvalidObjective);

  const Contract c{{Rational(1, 3), Rational(0)}};
  EXPECT_EQ(contractToJson(c).dump(), R"(["1/3","0/1"])");
  EXPECT_EQ(contractFromJson(contractToJson(c)), c);
  EXPECT_EQ(profileFromJson(profileToJson(ActionSet{2, 5})), (ActionSet{2, 5}));
  EXPECT_EQ(rationalFromJson(Json(3), "/x"), Rational(3));
}

TEST(Csv, Report) {
  const std::string empty = emitReport({});
  EXPECT_EQ(std::count(empty.begin(), empty.end(), '\n'), 1);
  EXPECT_EQ(empty.rfind("label,solver,objective,budget,eps,value,", 0), 0u);

  Instance inst = parseInstance(kMinimal);
  const SolveResult r = bruteForceOpt(inst, Rational(1), Objective::profit());
  ReportRow row{"one", "profit", Rational(1), std::nullopt, r, Rational(1, 2)};
  const std::string csv = emitReport({row});
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
  // reference / value = (1/2) / (1/4) = 2.
  EXPECT_NE(csv.find(",1/2,2/1,2\n"), std::string::npos) << csv;
  EXPECT_EQ(emitReport({row}), csv);
}

TEST(Csv, Experiment) {
  const HardnessSpec spec = withDefaultEps(HardnessSpec{4, Rational(1, 2), Rational(1), Rational(0), {0, 1}});
  const ExperimentReport r = adversaryExperiment(randomGuessSolver(), spec, 7, 10, 2);
  const std::string rows = experimentTrialsCsv(r);
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 8);
  const std::string summary = experimentSummaryCsv(r);
  EXPECT_EQ(summary.rfind("n,B,K,eps,trials,queryBudget,successes,baselineProb", 0), 0u);
  EXPECT_EQ(experimentTrialsCsv(adversaryExperiment(randomGuessSolver(), spec, 7, 10, 2)), rows);
}
