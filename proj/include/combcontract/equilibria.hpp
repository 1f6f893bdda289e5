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

#ifndef COMBCONTRACT_EQUILIBRIA_HPP_
#define COMBCONTRACT_EQUILIBRIA_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "combcontract/instance.hpp"

namespace combcontract {

// All 2^m values of f, indexed by mask. Passing one to the routines below
// replaces oracle queries with table lookups; results are identical.
using ValueTable = std::vector<Rational>;

// alpha_i * f(S_i + S_-i) - c(S_i).
Rational agentUtility(const Instance& inst, AgentId i, const Rational& alphaI, ActionSet profile);

// A best response of agent i to S_-i under share alpha_i. Among maximizers
// of alpha_i * f(X + S_-i) - c(X) over X in T_i, prefers the one with the
// largest f, then the lexicographically smallest. alpha_i = 0 gives the
// empty set. Enumerates T_i; when T_i is larger than `enumCap` and the
// oracle is gross substitutes, falls back to greedy demand from S_-i.
ActionSet bestResponse(const Instance& inst, AgentId i, const Rational& alphaI,
                       ActionSet sMinusI, int enumCap = kDefaultEnumCap);

// bestResponse without the alpha_i = 0 shortcut: at zero share the agent
// takes the highest-reward set among its zero-cost options.
ActionSet favourableResponse(const Instance& inst, AgentId i, const Rational& alphaI,
                             ActionSet sMinusI, int enumCap = kDefaultEnumCap);

struct AgentCheck {
  AgentId agent = 0;
  Rational utility;         // at the given profile
  Rational bestUtility;     // best over all deviations
  ActionSet bestDeviation;  // a set in T_i attaining bestUtility
};

struct NeCertificate {
  bool nash = true;
  ActionProfile profile;
  std::vector<AgentCheck> agents;
  std::optional<AgentId> deviatingAgent;  // first agent with a strict gain
};

// Weak-inequality Nash check by per-agent enumeration of T_i (greedy demand
// for gross-substitutes agents beyond `enumCap`).
NeCertificate checkNash(const Instance& inst, const Contract& alpha, ActionProfile s,
                        int enumCap = kDefaultEnumCap);
NeCertificate checkNash(const Instance& inst, const Contract& alpha, ActionProfile s,
                        const ValueTable& table);
bool isNash(const Instance& inst, const Contract& alpha, ActionProfile s,
            int enumCap = kDefaultEnumCap);

struct StabilityReport {
  bool stable = true;
  std::optional<AgentId> agent;
  ActionSet deviation;  // a strictly better subset of S_agent
};

// Nash check against deviations to subsets of each agent's own S_i only.
StabilityReport isSubsetStable(const Instance& inst, const Contract& alpha, ActionProfile s);

// A demand set at prices c_a / alpha_owner(a); actions of agents with
// alpha_i = 0 are excluded. Always a Nash equilibrium of alpha.
ActionProfile neFromDemand(const Instance& inst, const Contract& alpha,
                           int enumCap = kDefaultEnumCap);

// (1/4) * B / n.
Rational defaultDoublingEps(const Rational& budget, int numAgents);

// (2 alpha + eps, neFromDemand(2 alpha + eps)).
std::pair<Contract, ActionProfile> doubleContract(const Instance& inst, const Contract& alpha,
                                                  const Rational& epsPerAgent);

// The least contract under which S is a (weak) Nash equilibrium, agent by
// agent with the other agents fixed at S_-i; nullopt when no share works.
// A deviation with weakly more reward and strictly less cost defeats every
// share; so does a deviation with strictly more reward whose upper bound
// on alpha_i falls below the lower bound from the other deviations.
std::optional<Contract> minIncentivizingContract(const Instance& inst, ActionProfile s,
                                                 int enumCap = kDefaultEnumCap);
std::optional<Contract> minIncentivizingContract(const Instance& inst, ActionProfile s,
                                                 const ValueTable& table);

// alpha_i = max(0, t_i(1) - t_i(0)).
Contract linearize(const GeneralContract& t);

// Nash check under a general contract: agent i's utility is
// t_i(0) + (t_i(1) - t_i(0)) * f(S) - c(S_i).
bool isNashGeneral(const Instance& inst, const GeneralContract& t, ActionProfile s,
                   int enumCap = kDefaultEnumCap);

}  // namespace combcontract

#endif  // COMBCONTRACT_EQUILIBRIA_HPP_
