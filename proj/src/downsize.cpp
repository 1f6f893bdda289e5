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

ActionSet actionsOf(const Instance& inst, ActionProfile s, const std::vector<AgentId>& group) {
  ActionSet out;
  for (AgentId i : group) out |= s & inst.agentActions(i);
  return out;
}

}  // namespace

DownsizeResult downsize(const Instance& inst, int m, const Contract& alpha, ActionProfile s,
                        int enumCap) {
  if (m < 3) fail(ErrorCode::kInvalidArgument, "M must be at least 3");
  const NeCertificate cert = checkNash(inst, alpha, s, enumCap);
  if (!cert.nash) {
    fail(ErrorCode::kNotAnEquilibrium,
         "agent " + std::to_string(*cert.deviatingAgent) + " has a profitable deviation");
  }
  const int n = inst.numAgents();
  const Rational bigM(m);
  const Rational p = alpha.total();
  const Rational fS = inst.oracle().value(s);
  const Rational threshold = fS / Rational(m - 1);

  DownsizeResult out;
  out.rewardBefore = fS;
  out.paymentBefore = p;

  auto finish = [&](DownsizeResult& r) {
    r.rewardAfter = inst.oracle().value(r.profile);
    r.paymentAfter = r.contract.total();
    r.rewardGuarantee = fS <= r.rewardAfter * Rational(2 * m - 2);
    r.paymentGuarantee = r.singleAgent ? true : r.paymentAfter * bigM <= Rational(5) * p;
    return r;
  };

  std::vector<AgentId> high;
  std::vector<AgentId> rest;
  for (AgentId i = 0; i < n; ++i) {
    (p < alpha.alpha[i] * bigM ? high : rest).push_back(i);
  }

  for (AgentId i : high) {
    const ActionSet si = s & inst.agentActions(i);
    if (inst.oracle().value(si) < threshold) continue;
    PriceVector prices = PriceVector::uniform(inst.numActions(), Rational(0));
    prices.excluded = inst.groundSet() - inst.agentActions(i);
    for (ActionId a : inst.agentActions(i)) prices.price[a] = inst.cost(a) / alpha.alpha[i];
    out.singleAgent = i;
    out.paid = AgentSet{i};
    out.contract = restrictContract(alpha, out.paid);
    out.profile = demandWithBase(inst.oracle(), prices, si, enumCap);
    return finish(out);
  }

  std::vector<AgentId> u = rest;
  for (int r = 1; r <= m - static_cast<int>(high.size()) - 2 && !u.empty(); ++r) {
    std::vector<AgentId> w;
    Rational paid;
    std::size_t k = 0;
    while (k < u.size() && paid * bigM <= p) {
      paid += alpha.alpha[u[k]];
      w.push_back(u[k++]);
    }
    if (threshold <= inst.oracle().value(actionsOf(inst, s, w))) {
      u = std::move(w);
      break;
    }
    u.erase(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
  }
  // u is empty when every packed group fell short; the contract is then
  // the uniform eps alone.
  for (AgentId i : u) out.paid.insert(i);
  const Rational eps = p / Rational(static_cast<long>(n) * m);
  out.contract = Contract::zero(n);
  for (AgentId i = 0; i < n; ++i) {
    out.contract.alpha[i] = (out.paid.contains(i) ? alpha.alpha[i] * Rational(2) : Rational(0)) + eps;
  }
  out.profile = neFromDemand(inst, out.contract, enumCap);
  return finish(out);
}

SolveResult gsConstantFactor(const Instance& inst, const Rational& budget, const Objective& obj,
                             int enumCap) {
  if (!classAtLeast(inst.oracle().declaredClass(), FunctionClass::kGrossSubstitutes)) {
    fail(ErrorCode::kSolverMismatch, "the constant-factor pipeline needs a gross-substitutes reward");
  }
  if (budget.sign() < 0 || budget > Rational(1)) {
    fail(ErrorCode::kInvalidArgument, "budget must lie in [0, 1]");
  }
  const QueryCounts before = inst.oracle().counts();
  const int n = inst.numAgents();

  SolveResult best;
  best.solver = "gs-constant-factor";
  best.certifiedFactor = kGsPipelineFactor;
  best.contract = Contract::zero(n);
  best.value = evaluate(obj, inst, best.contract, ActionSet{});
  auto consider = [&](const Contract& alpha, ActionProfile s) {
    if (!alpha.budgetFeasible(budget)) return;
    Rational v = evaluate(obj, inst, alpha, s);
    if (best.value < v) {
      best.value = std::move(v);
      best.contract = alpha;
      best.profile = s;
    }
  };

  if (budget.isZero()) {
    // Only zero shares are feasible; the exact answer is cheap to find.
    BruteOptions options;
    options.enumCap = enumCap;
    const SolveResult exact = bruteForceOpt(inst, budget, obj, options);
    consider(exact.contract, exact.profile);
  } else {
    const Rational target(1);  // B'
    const Instance scaled = scaleCosts(inst, Rational(4, 3) * target / budget);
    BruteOptions options;
    options.enumCap = enumCap;
    const SolveResult base = bruteForceOpt(scaled, target, Objective::profit(), options);
    Contract rescaled = base.contract;
    for (Rational& a : rescaled.alpha) a *= Rational(3, 4) * budget / target;

    std::vector<std::pair<Contract, ActionProfile>> candidates{{rescaled, base.profile}};
    for (AgentId i = 0; i < n; ++i) {
      const SolveResult single = gsSingleAgentExact(inst, i, Objective::reward(), budget, enumCap);
      candidates.emplace_back(single.contract, single.profile);
    }
    for (const auto& [alpha, s] : candidates) {
      const DownsizeResult d = downsize(inst, 6, alpha, s, enumCap);
      consider(d.contract, d.profile);
    }
    for (AgentId i = 0; i < n; ++i) {
      const SolveResult single = gsSingleAgentExact(inst, i, obj, budget, enumCap);
      consider(single.contract, single.profile);
    }
  }
  const QueryCounts now = inst.oracle().counts();
  best.queries = QueryCounts{now.value - before.value, now.demand - before.demand};
  return best;
}

}  // namespace combcontract
