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

#ifndef COMBCONTRACT_OBJECTIVES_HPP_
#define COMBCONTRACT_OBJECTIVES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combcontract/equilibria.hpp"
#include "combcontract/instance.hpp"

namespace combcontract {

// Profit, reward, welfare or a convex combination of objectives. Every
// built-in objective is a function of (sum of shares, f(S), c(S)) only.
class Objective {
 public:
  enum class Kind { kProfit, kReward, kWelfare, kCombo };

  static Objective profit();
  static Objective reward();
  static Objective welfare();
  // Weights must be positive and sum to exactly 1 (kInvalidObjective).
  static Objective combo(std::vector<Rational> weights, std::vector<Objective> parts);

  Kind kind() const { return kind_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<Objective>& parts() const { return parts_; }
  bool involvesWelfare() const;
  std::string name() const;

  // phi given sum(alpha), f(S) and c(S).
  Rational value(const Rational& totalShare, const Rational& reward, const Rational& cost) const;

  friend bool operator==(const Objective& a, const Objective& b);

 private:
  explicit Objective(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Rational> weights_;
  std::vector<Objective> parts_;
};

// "profit" | "reward" | "welfare"; combos go through JSON.
Objective parseObjectiveName(const std::string& name);

Rational evaluate(const Objective& obj, const Instance& inst, const Contract& alpha,
                  ActionProfile s);

struct BestOptions {
  int gridDenominator = 8;  // shares k/D per agent
  // Objectives that involve welfare are checked on pairs with S in NE(alpha);
  // that is where welfare is defined. kAll forces every pair.
  enum class Domain { kAuto, kAll, kEquilibria } domain = Domain::kAuto;
  int maxActions = 10;
  // Skip grid contracts with total share above this (1 keeps alpha in the
  // simplex the model allows).
  Rational maxTotalShare{1};
};

struct BestReport {
  bool pass = true;
  bool equilibriumDomain = false;
  std::uint64_t contracts = 0;
  std::uint64_t checks = 0;
  // First counterexample.
  std::string property;  // "sandwich", "decomposable", "increasing-in-S", "decreasing-in-alpha"
  std::optional<Contract> alpha;
  std::optional<Contract> alpha2;
  ActionProfile s;
  ActionProfile s2;
  std::optional<AgentId> agent;
};

// Checks the four BEST properties on a share grid plus the least contracts
// incentivizing each profile, with every profile of the instance.
BestReport verifyBestProperties(const Objective& obj, const Instance& inst,
                                const BestOptions& options = {});

}  // namespace combcontract

#endif  // COMBCONTRACT_OBJECTIVES_HPP_
