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

#ifndef COMBCONTRACT_INSTANCE_HPP_
#define COMBCONTRACT_INSTANCE_HPP_

#include <vector>

#include "combcontract/id_set.hpp"
#include "combcontract/rational.hpp"
#include "combcontract/rewards.hpp"

namespace combcontract {

struct Action {
  ActionId id = 0;
  AgentId owner = 0;
  Rational cost;
};

// <A, {T_i}, f, c>: n agents, m actions with disjoint owners and
// non-negative costs, and a reward oracle over the m actions.
//
// Construction only checks structural consistency (ids, owners, oracle
// ground size); validateInstance() performs the full check, including the
// oracle range.
class Instance {
 public:
  Instance(int numAgents, std::vector<Action> actions, OraclePtr oracle);

  int numAgents() const { return num_agents_; }
  int numActions() const { return static_cast<int>(actions_.size()); }
  const std::vector<Action>& actions() const { return actions_; }
  const Rational& cost(ActionId a) const { return actions_.at(a).cost; }
  AgentId owner(ActionId a) const { return actions_.at(a).owner; }
  // T_i.
  ActionSet agentActions(AgentId i) const { return agent_actions_.at(i); }
  ActionSet groundSet() const { return ActionSet::range(numActions()); }
  AgentSet agents() const { return AgentSet::range(num_agents_); }
  const RewardOracle& oracle() const { return *oracle_; }
  const OraclePtr& oraclePtr() const { return oracle_; }

  // Same agents and oracle, new costs.
  Instance withCosts(std::vector<Rational> costs) const;

 private:
  int num_agents_;
  std::vector<Action> actions_;
  std::vector<ActionSet> agent_actions_;
  OraclePtr oracle_;
};

// Throws ContractError with kDuplicateActionId, kUnknownAgentId,
// kNegativeCost, kNonzeroEmptyValue or kOracleRangeViolation.
void validateInstance(const Instance& inst);

// c(S).
Rational cost(const Instance& inst, ActionSet s);

// Linear contract: alpha[i] is agent i's share of the reward on success.
struct Contract {
  std::vector<Rational> alpha;

  static Contract zero(int numAgents);
  Rational total() const;
  bool budgetFeasible(const Rational& budget) const { return total() <= budget; }
  friend bool operator==(const Contract&, const Contract&) = default;
};

// alpha|_G: alpha_i on G, zero elsewhere.
Contract restrictContract(const Contract& alpha, AgentSet group);

// General (two-outcome) contract: per agent, payment on failure and on
// success.
struct GeneralContract {
  std::vector<Rational> onFailure;
  std::vector<Rational> onSuccess;
};

}  // namespace combcontract

#endif  // COMBCONTRACT_INSTANCE_HPP_
