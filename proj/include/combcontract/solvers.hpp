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

#ifndef COMBCONTRACT_SOLVERS_HPP_
#define COMBCONTRACT_SOLVERS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "combcontract/equilibria.hpp"
#include "combcontract/instance.hpp"
#include "combcontract/objectives.hpp"

namespace combcontract {

struct SolveResult {
  std::string solver;
  Contract contract;
  ActionProfile profile;
  Rational value;
  // Proven approximation factor; nullopt means exact.
  std::optional<Rational> certifiedFactor;
  QueryCounts queries;
};

// ---------------------------------------------------------------------------
// Exact enumeration.

struct BruteOptions {
  int enumCap = 16;                   // max |T|
  std::optional<Rational> perAgentCap;  // alpha_i <= cap for every agent
};

// Every profile with its least incentivizing contract; keeps budget-feasible
// ones and returns the best. Ties keep the smaller profile mask.
SolveResult bruteForceOpt(const Instance& inst, const Rational& budget, const Objective& obj,
                          const BruteOptions& options = {});

// Max reward subject to alpha_i <= 3B/4 for all i.
SolveResult maxRewardBoundedBrute(const Instance& inst, const Rational& budget,
                                  int enumCap = 16);

// Best single-agent contract for agent i: alpha = alpha|_i, S within T_i.
SolveResult gsSingleAgentExact(const Instance& inst, AgentId i, const Objective& obj,
                               const Rational& budget, int enumCap = kDefaultEnumCap);

// ---------------------------------------------------------------------------
// Additive FPTAS.

enum class DpValue { kReward, kWelfare };  // phi = f or phi = f - c

struct DpTable {
  DpValue phi = DpValue::kReward;
  Rational step;  // delta * b
  int columns = 0;  // x ranges over 0..columns-1 units of `step`
  // Per agent (in agent order), the kept actions sorted by c/f and their
  // ratios and unit values.
  std::vector<std::vector<ActionId>> order;
  std::vector<std::vector<Rational>> ratio;
  std::vector<std::vector<long>> units;
  // payment[j][x]; nullopt is infinity. choice[j][x] is the prefix length
  // chosen for agent j-1 (row 0 has no choices).
  std::vector<std::vector<std::optional<Rational>>> payment;
  std::vector<std::vector<int>> choice;

  const std::optional<Rational>& final(int x) const { return payment.back()[x]; }
  // The contract and profile attaining payment[n][x].
  std::pair<Contract, ActionProfile> reconstruct(int x) const;
};

// Dynamic program over agents with the phi-value discretized to multiples of
// delta * b, delta = eps / |T|. Drops actions with f({a}) = 0 and actions
// whose ratio c/f exceeds `maxRatio` (they can never be paid for).
DpTable buildDpTable(const Instance& inst, DpValue phi, const Rational& b, const Rational& eps,
                     const std::optional<Rational>& maxRatio = std::nullopt);

// Requires an additive oracle and a plain profit, reward or welfare
// objective (kSolverMismatch otherwise).
SolveResult additiveFptas(const Instance& inst, const Rational& budget, const Rational& eps,
                          const Objective& obj);

// ---------------------------------------------------------------------------
// Single-agent FPTAS for profit.

// Smallest K with (1 - eps)^K <= 1 / (m 2^m).
int singleAgentGridSize(int m, const Rational& eps);

SolveResult singleAgentFptas(const Instance& inst, const Rational& budget, const Rational& eps,
                             int enumCap = kDefaultEnumCap);

// ---------------------------------------------------------------------------
// Downsizing and the constant-factor pipeline.

struct DownsizeResult {
  Contract contract;
  ActionProfile profile;
  std::optional<AgentId> singleAgent;  // set when the single-agent branch ran
  AgentSet paid;                       // U
  Rational rewardBefore;
  Rational rewardAfter;
  Rational paymentBefore;
  Rational paymentAfter;
  bool rewardGuarantee = false;   // f(S') >= f(S) / (2M - 2)
  bool paymentGuarantee = false;  // sum <= (5/M) sum, or the single-agent form
};

// Throws kNotAnEquilibrium unless S is a Nash equilibrium of alpha.
DownsizeResult downsize(const Instance& inst, int m, const Contract& alpha, ActionProfile s,
                        int enumCap = kDefaultEnumCap);

Instance scaleCosts(const Instance& inst, const Rational& factor);

inline const Rational kGsPipelineFactor{6001};

// Cost-scaled exact Max-Profit(1), rescaled, downsized with M = 6, and
// compared with every exact single-agent solution.
SolveResult gsConstantFactor(const Instance& inst, const Rational& budget, const Objective& obj,
                             int enumCap = 16);

}  // namespace combcontract

#endif  // COMBCONTRACT_SOLVERS_HPP_
