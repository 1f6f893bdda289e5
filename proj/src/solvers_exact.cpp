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

#include <string>

#include "combcontract/errors.hpp"
#include "combcontract/solvers.hpp"

namespace combcontract {

namespace {

QueryCounts since(const Instance& inst, const QueryCounts& before) {
  const QueryCounts now = inst.oracle().counts();
  return QueryCounts{now.value - before.value, now.demand - before.demand};
}

void checkBudget(const Rational& budget) {
  if (budget.sign() < 0 || budget > Rational(1)) {
    fail(ErrorCode::kInvalidArgument, "budget must lie in [0, 1]");
  }
}

}  // namespace

SolveResult bruteForceOpt(const Instance& inst, const Rational& budget, const Objective& obj,
                          const BruteOptions& options) {
  checkBudget(budget);
  const int m = inst.numActions();
  if (m > options.enumCap) {
    fail(ErrorCode::kGroundSetTooLarge, "brute force supports at most " +
                                            std::to_string(options.enumCap) + " actions, got " +
                                            std::to_string(m));
  }
  const QueryCounts before = inst.oracle().counts();
  const ValueTable f = tabulate(inst.oracle());

  SolveResult best;
  best.solver = "brute";
  best.contract = Contract::zero(inst.numAgents());
  best.value = obj.value(Rational(0), f[0], Rational(0));
  for (std::size_t mask = 1; mask < f.size(); ++mask) {
    const ActionSet s = ActionSet::fromMask(mask);
    std::optional<Contract> alpha = minIncentivizingContract(inst, s, f);
    if (!alpha || !alpha->budgetFeasible(budget)) continue;
    if (options.perAgentCap) {
      bool capped = true;
      for (const Rational& a : alpha->alpha) capped = capped && a <= *options.perAgentCap;
      if (!capped) continue;
    }
    Rational v = obj.value(alpha->total(), f[mask], cost(inst, s));
    if (best.value < v) {
      best.value = std::move(v);
      best.contract = std::move(*alpha);
      best.profile = s;
    }
  }
  best.queries = since(inst, before);
  return best;
}

SolveResult maxRewardBoundedBrute(const Instance& inst, const Rational& budget, int enumCap) {
  BruteOptions options;
  options.enumCap = enumCap;
  options.perAgentCap = budget * Rational(3, 4);
  SolveResult out = bruteForceOpt(inst, budget, Objective::reward(), options);
  out.solver = "max-reward-bounded";
  return out;
}

SolveResult gsSingleAgentExact(const Instance& inst, AgentId i, const Objective& obj,
                               const Rational& budget, int enumCap) {
  checkBudget(budget);
  if (i < 0 || i >= inst.numAgents()) {
    fail(ErrorCode::kUnknownAgentId, "unknown agent " + std::to_string(i));
  }
  const ActionSet ti = inst.agentActions(i);
  if (ti.size() > enumCap) {
    fail(ErrorCode::kGroundSetTooLarge,
         "agent " + std::to_string(i) + " has too many actions to enumerate");
  }
  const QueryCounts before = inst.oracle().counts();
  // f on subsets of T_i only; the other agents sit at the empty set.
  std::vector<Rational> f(std::size_t{1} << ti.size());
  const std::vector<int> ids = ti.toVector();
  auto expand = [&](std::uint64_t local) {
    ActionSet s;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if ((local >> k) & 1U) s.insert(ids[k]);
    }
    return s;
  };
  for (std::uint64_t local = 0; local < f.size(); ++local) f[local] = inst.oracle().value(expand(local));

  SolveResult best;
  best.solver = "single-agent-exact";
  best.contract = Contract::zero(inst.numAgents());
  best.value = obj.value(Rational(0), f[0], Rational(0));
  for (std::uint64_t local = 1; local < f.size(); ++local) {
    const ActionSet s = expand(local);
    const Rational cs = cost(inst, s);
    // Least alpha_i with alpha_i * (f(S) - f(X)) >= c(S) - c(X) for all X.
    Rational lower;
    std::optional<Rational> upper;
    bool feasible = true;
    for (std::uint64_t x = 0; x < f.size() && feasible; ++x) {
      if (x == local) continue;
      const Rational df = f[local] - f[x];
      const Rational dc = cs - cost(inst, expand(x));
      if (df.sign() > 0) {
        lower = max(lower, dc / df);
      } else if (dc.sign() > 0) {
        feasible = false;
      } else if (df.sign() < 0) {
        const Rational bound = dc / df;
        upper = upper ? min(*upper, bound) : bound;
      }
    }
    if (!feasible || (upper && *upper < lower) || budget < lower) continue;
    Rational v = obj.value(lower, f[local], cs);
    if (best.value < v) {
      best.value = std::move(v);
      best.contract = Contract::zero(inst.numAgents());
      best.contract.alpha[i] = lower;
      best.profile = s;
    }
  }
  best.queries = since(inst, before);
  return best;
}

Instance scaleCosts(const Instance& inst, const Rational& factor) {
  if (factor.sign() <= 0) fail(ErrorCode::kInvalidArgument, "cost factor must be positive");
  std::vector<Rational> costs;
  costs.reserve(inst.actions().size());
  for (const Action& a : inst.actions()) costs.push_back(a.cost * factor);
  return inst.withCosts(std::move(costs));
}

}  // namespace combcontract
