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

#include "combcontract/instance.hpp"

#include <string>

#include "combcontract/errors.hpp"

namespace combcontract {

Instance::Instance(int numAgents, std::vector<Action> actions, OraclePtr oracle)
    : num_agents_(numAgents), actions_(std::move(actions)), oracle_(std::move(oracle)) {
  if (num_agents_ <= 0 || num_agents_ > kMaxIds) {
    fail(ErrorCode::kInvalidArgument,
         "number of agents must be in [1, 64], got " + std::to_string(num_agents_));
  }
  if (static_cast<int>(actions_.size()) > kMaxIds) {
    fail(ErrorCode::kInvalidArgument, "at most 64 actions are supported");
  }
  if (!oracle_) fail(ErrorCode::kInvalidArgument, "instance needs a reward oracle");

  // Actions may arrive in any order; store them by id.
  std::vector<Action> by_id(actions_.size());
  std::vector<bool> seen(actions_.size(), false);
  for (const Action& a : actions_) {
    if (a.id < 0 || a.id >= static_cast<int>(actions_.size()) || seen[a.id]) {
      fail(ErrorCode::kDuplicateActionId,
           "action ids must be exactly 0..m-1; offending id " + std::to_string(a.id));
    }
    seen[a.id] = true;
    by_id[a.id] = a;
  }
  actions_ = std::move(by_id);

  agent_actions_.assign(num_agents_, ActionSet{});
  for (const Action& a : actions_) {
    if (a.owner < 0 || a.owner >= num_agents_) {
      fail(ErrorCode::kUnknownAgentId, "action " + std::to_string(a.id) +
                                           " has unknown owner " + std::to_string(a.owner));
    }
    agent_actions_[a.owner].insert(a.id);
  }
  if (oracle_->groundSize() != numActions()) {
    fail(ErrorCode::kInvalidArgument,
         "oracle ground set has " + std::to_string(oracle_->groundSize()) +
             " items but the instance has " + std::to_string(numActions()) + " actions");
  }
}

Instance Instance::withCosts(std::vector<Rational> costs) const {
  if (costs.size() != actions_.size()) {
    fail(ErrorCode::kInvalidArgument, "cost vector has the wrong length");
  }
  std::vector<Action> actions = actions_;
  for (std::size_t a = 0; a < actions.size(); ++a) actions[a].cost = std::move(costs[a]);
  return Instance(num_agents_, std::move(actions), oracle_);
}

void validateInstance(const Instance& inst) {
  for (const Action& a : inst.actions()) {
    if (a.cost.sign() < 0) {
      fail(ErrorCode::kNegativeCost,
           "action " + std::to_string(a.id) + " has negative cost " + a.cost.str());
    }
  }
  const RewardOracle& f = inst.oracle();
  if (const Rational empty = f.value(ActionSet{}); !empty.isZero()) {
    fail(ErrorCode::kNonzeroEmptyValue, "f(empty set) = " + empty.str());
  }
  for (ActionId a = 0; a < inst.numActions(); ++a) {
    const Rational v = f.value(ActionSet{a});
    if (v.sign() < 0 || v > Rational(1)) {
      fail(ErrorCode::kOracleRangeViolation,
           "f({" + std::to_string(a) + "}) = " + v.str() + " is outside [0, 1]");
    }
  }
  if (const Rational full = f.value(inst.groundSet()); full.sign() < 0 || full > Rational(1)) {
    fail(ErrorCode::kOracleRangeViolation, "f(T) = " + full.str() + " is outside [0, 1]");
  }
}

Rational cost(const Instance& inst, ActionSet s) {
  if (!s.subsetOf(inst.groundSet())) {
    fail(ErrorCode::kUnknownActionId, "action profile leaves the ground set");
  }
  Rational total;
  for (ActionId a : s) total += inst.cost(a);
  return total;
}

Contract Contract::zero(int numAgents) {
  return Contract{std::vector<Rational>(static_cast<std::size_t>(numAgents))};
}

Rational Contract::total() const {
  Rational sum;
  for (const Rational& a : alpha) sum += a;
  return sum;
}

Contract restrictContract(const Contract& alpha, AgentSet group) {
  const int n = static_cast<int>(alpha.alpha.size());
  if (!group.subsetOf(AgentSet::range(n))) {
    fail(ErrorCode::kUnknownAgentId, "restriction group names an unknown agent");
  }
  Contract out = Contract::zero(n);
  for (AgentId i : group) out.alpha[i] = alpha.alpha[i];
  return out;
}

}  // namespace combcontract
