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

#include "combcontract/equilibria.hpp"

#include <string>

#include "combcontract/errors.hpp"

namespace combcontract {

namespace {

void checkContract(const Instance& inst, const Contract& alpha) {
  if (static_cast<int>(alpha.alpha.size()) != inst.numAgents()) {
    fail(ErrorCode::kInvalidArgument, "contract has " + std::to_string(alpha.alpha.size()) +
                                          " shares for " + std::to_string(inst.numAgents()) +
                                          " agents");
  }
  for (const Rational& a : alpha.alpha) {
    if (a.sign() < 0) fail(ErrorCode::kInvalidArgument, "contract shares must be non-negative");
  }
}

void checkProfile(const Instance& inst, ActionSet s) {
  if (!s.subsetOf(inst.groundSet())) {
    fail(ErrorCode::kUnknownActionId, "action profile leaves the ground set");
  }
}

void checkAgent(const Instance& inst, AgentId i) {
  if (i < 0 || i >= inst.numAgents()) {
    fail(ErrorCode::kUnknownAgentId, "unknown agent " + std::to_string(i));
  }
}

struct Response {
  ActionSet set;
  Rational utility;
  Rational reward;
};

// Greedy demand over T_i with the rest of the profile as a fixed base.
Response greedyResponse(const Instance& inst, AgentId i, const Rational& alphaI, ActionSet others) {
  const ActionSet ti = inst.agentActions(i);
  if (alphaI.isZero()) return Response{ActionSet{}, Rational(0), inst.oracle().value(others)};
  PriceVector prices = PriceVector::uniform(inst.numActions(), Rational(0));
  prices.excluded = inst.groundSet() - ti;
  for (ActionId a : ti) prices.price[a] = inst.cost(a) / alphaI;
  const ActionSet x = demandWithBase(inst.oracle(), prices, others) - others;
  const Rational reward = inst.oracle().value(x | others);
  return Response{x, alphaI * reward - cost(inst, x), reward};
}

// Exhaustive best response with the principal-favourable tie-break.
template <class F>
Response enumerateResponse(const Instance& inst, AgentId i, const Rational& alphaI,
                           ActionSet others, F&& f) {
  std::optional<Response> best;
  forEachSubset(inst.agentActions(i), [&](ActionSet x) {
    Rational reward = f(x | others);
    Rational u = alphaI * reward - cost(inst, x);
    const bool better =
        !best || best->utility < u ||
        (best->utility == u &&
         (best->reward < reward || (best->reward == reward && lexLess(x, best->set))));
    if (better) best = Response{x, std::move(u), std::move(reward)};
  });
  return *best;
}

template <class F>
Response responseFor(const Instance& inst, AgentId i, const Rational& alphaI, ActionSet others,
                     int enumCap, F&& f) {
  if (inst.agentActions(i).size() <= enumCap) {
    return enumerateResponse(inst, i, alphaI, others, f);
  }
  if (classAtLeast(inst.oracle().declaredClass(), FunctionClass::kGrossSubstitutes)) {
    return greedyResponse(inst, i, alphaI, others);
  }
  fail(ErrorCode::kGroundSetTooLarge, "agent " + std::to_string(i) + " has " +
                                          std::to_string(inst.agentActions(i).size()) +
                                          " actions, above the enumeration cap");
}

template <class F>
NeCertificate nashCertificate(const Instance& inst, const Contract& alpha, ActionProfile s,
                              int enumCap, F&& f) {
  checkContract(inst, alpha);
  checkProfile(inst, s);
  NeCertificate cert;
  cert.profile = s;
  const Rational reward = f(s);
  for (AgentId i = 0; i < inst.numAgents(); ++i) {
    const ActionSet ti = inst.agentActions(i);
    const Rational& a = alpha.alpha[i];
    Response best = responseFor(inst, i, a, s - ti, enumCap, f);
    AgentCheck check{i, a * reward - cost(inst, s & ti), std::move(best.utility), best.set};
    if (check.utility < check.bestUtility && !cert.deviatingAgent) {
      cert.nash = false;
      cert.deviatingAgent = i;
    }
    cert.agents.push_back(std::move(check));
  }
  return cert;
}

template <class F>
std::optional<Contract> minIncentivizing(const Instance& inst, ActionProfile s, int enumCap,
                                         F&& f) {
  checkProfile(inst, s);
  Contract out = Contract::zero(inst.numAgents());
  const Rational reward = f(s);
  for (AgentId i = 0; i < inst.numAgents(); ++i) {
    const ActionSet ti = inst.agentActions(i);
    if (ti.size() > enumCap) {
      fail(ErrorCode::kGroundSetTooLarge,
           "agent " + std::to_string(i) + " has too many actions to enumerate");
    }
    const ActionSet own = s & ti;
    const ActionSet others = s - ti;
    const Rational own_cost = cost(inst, own);
    Rational lower;  // shares below this lose to some deviation
    std::optional<Rational> upper;
    bool feasible = true;
    forEachSubset(ti, [&](ActionSet x) {
      if (!feasible || x == own) return;
      // Need alpha * df >= dc.
      const Rational df = reward - f(x | others);
      const Rational dc = own_cost - cost(inst, x);
      if (df.sign() > 0) {
        lower = max(lower, dc / df);
      } else if (df.isZero()) {
        if (dc.sign() > 0) feasible = false;
      } else {
        if (dc.sign() > 0) {
          feasible = false;
        } else {
          Rational bound = dc / df;
          upper = upper ? min(*upper, bound) : bound;
        }
      }
    });
    if (!feasible || (upper && *upper < lower)) return std::nullopt;
    out.alpha[i] = lower;
  }
  return out;
}

auto oracleValue(const Instance& inst) {
  return [&inst](ActionSet s) { return inst.oracle().value(s); };
}

auto tableValue(const Instance& inst, const ValueTable& table) {
  if (table.size() != (std::size_t{1} << inst.numActions())) {
    fail(ErrorCode::kInvalidArgument, "value table size does not match the instance");
  }
  return [&table](ActionSet s) -> const Rational& { return table[s.mask()]; };
}

}  // namespace

Rational agentUtility(const Instance& inst, AgentId i, const Rational& alphaI, ActionSet profile) {
  checkAgent(inst, i);
  checkProfile(inst, profile);
  return alphaI * inst.oracle().value(profile) - cost(inst, profile & inst.agentActions(i));
}

ActionSet bestResponse(const Instance& inst, AgentId i, const Rational& alphaI,
                       ActionSet sMinusI, int enumCap) {
  checkAgent(inst, i);
  checkProfile(inst, sMinusI);
  if (alphaI.sign() < 0) fail(ErrorCode::kInvalidArgument, "share must be non-negative");
  if (sMinusI.intersects(inst.agentActions(i))) {
    fail(ErrorCode::kInvalidArgument, "S_-i overlaps agent " + std::to_string(i) + "'s actions");
  }
  if (alphaI.isZero()) return ActionSet{};
  return responseFor(inst, i, alphaI, sMinusI, enumCap, oracleValue(inst)).set;
}

ActionSet favourableResponse(const Instance& inst, AgentId i, const Rational& alphaI,
                             ActionSet sMinusI, int enumCap) {
  checkAgent(inst, i);
  checkProfile(inst, sMinusI);
  if (alphaI.sign() < 0) fail(ErrorCode::kInvalidArgument, "share must be non-negative");
  if (sMinusI.intersects(inst.agentActions(i))) {
    fail(ErrorCode::kInvalidArgument, "S_-i overlaps agent " + std::to_string(i) + "'s actions");
  }
  return responseFor(inst, i, alphaI, sMinusI, enumCap, oracleValue(inst)).set;
}

NeCertificate checkNash(const Instance& inst, const Contract& alpha, ActionProfile s,
                        int enumCap) {
  return nashCertificate(inst, alpha, s, enumCap, oracleValue(inst));
}

NeCertificate checkNash(const Instance& inst, const Contract& alpha, ActionProfile s,
                        const ValueTable& table) {
  return nashCertificate(inst, alpha, s, kMaxIds, tableValue(inst, table));
}

bool isNash(const Instance& inst, const Contract& alpha, ActionProfile s, int enumCap) {
  return checkNash(inst, alpha, s, enumCap).nash;
}

StabilityReport isSubsetStable(const Instance& inst, const Contract& alpha, ActionProfile s) {
  checkContract(inst, alpha);
  checkProfile(inst, s);
  const Rational reward = inst.oracle().value(s);
  for (AgentId i = 0; i < inst.numAgents(); ++i) {
    const ActionSet own = s & inst.agentActions(i);
    const ActionSet others = s - own;
    const Rational& a = alpha.alpha[i];
    const Rational current = a * reward - cost(inst, own);
    StabilityReport report;
    forEachSubset(own, [&](ActionSet x) {
      if (!report.stable || x == own) return;
      if (current < a * inst.oracle().value(x | others) - cost(inst, x)) {
        report = StabilityReport{false, i, x};
      }
    });
    if (!report.stable) return report;
  }
  return {};
}

ActionProfile neFromDemand(const Instance& inst, const Contract& alpha, int enumCap) {
  checkContract(inst, alpha);
  PriceVector prices = PriceVector::uniform(inst.numActions(), Rational(0));
  for (const Action& a : inst.actions()) {
    const Rational& share = alpha.alpha[a.owner];
    if (share.isZero()) {
      prices.excluded.insert(a.id);
    } else {
      prices.price[a.id] = a.cost / share;
    }
  }
  return inst.oracle().demand(prices, enumCap);
}

Rational defaultDoublingEps(const Rational& budget, int numAgents) {
  if (numAgents <= 0) fail(ErrorCode::kInvalidArgument, "need at least one agent");
  return budget / Rational(4L * numAgents);
}

std::pair<Contract, ActionProfile> doubleContract(const Instance& inst, const Contract& alpha,
                                                  const Rational& epsPerAgent) {
  checkContract(inst, alpha);
  if (epsPerAgent.sign() <= 0) fail(ErrorCode::kInvalidEpsilon, "doubling needs eps > 0");
  Contract doubled = alpha;
  for (Rational& a : doubled.alpha) a = a * Rational(2) + epsPerAgent;
  ActionProfile s = neFromDemand(inst, doubled);
  return {std::move(doubled), s};
}

std::optional<Contract> minIncentivizingContract(const Instance& inst, ActionProfile s,
                                                 int enumCap) {
  return minIncentivizing(inst, s, enumCap, oracleValue(inst));
}

std::optional<Contract> minIncentivizingContract(const Instance& inst, ActionProfile s,
                                                 const ValueTable& table) {
  return minIncentivizing(inst, s, kMaxIds, tableValue(inst, table));
}

Contract linearize(const GeneralContract& t) {
  if (t.onFailure.size() != t.onSuccess.size()) {
    fail(ErrorCode::kInvalidArgument, "general contract payment lists differ in length");
  }
  Contract out = Contract::zero(static_cast<int>(t.onSuccess.size()));
  for (std::size_t i = 0; i < t.onSuccess.size(); ++i) {
    out.alpha[i] = max(Rational(0), t.onSuccess[i] - t.onFailure[i]);
  }
  return out;
}

bool isNashGeneral(const Instance& inst, const GeneralContract& t, ActionProfile s, int enumCap) {
  if (static_cast<int>(t.onSuccess.size()) != inst.numAgents() ||
      static_cast<int>(t.onFailure.size()) != inst.numAgents()) {
    fail(ErrorCode::kInvalidArgument, "general contract does not match the agent count");
  }
  checkProfile(inst, s);
  const Rational reward = inst.oracle().value(s);
  for (AgentId i = 0; i < inst.numAgents(); ++i) {
    const ActionSet ti = inst.agentActions(i);
    if (ti.size() > enumCap) {
      fail(ErrorCode::kGroundSetTooLarge, "agent " + std::to_string(i) + " has too many actions");
    }
    const Rational spread = t.onSuccess[i] - t.onFailure[i];
    const ActionSet others = s - ti;
    const Rational current = spread * reward - cost(inst, s & ti);
    bool stable = true;
    forEachSubset(ti, [&](ActionSet x) {
      if (stable && current < spread * inst.oracle().value(x | others) - cost(inst, x)) {
        stable = false;
      }
    });
    if (!stable) return false;
  }
  return true;
}

}  // namespace combcontract
