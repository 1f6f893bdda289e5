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

#ifndef COMBCONTRACT_HARDNESS_HPP_
#define COMBCONTRACT_HARDNESS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "combcontract/equilibria.hpp"
#include "combcontract/instance.hpp"
#include "combcontract/rewards.hpp"

namespace combcontract {

// Layout of the hidden-set family for n unit agents:
//   actions 0..n-1   one unit action per agent 0..n-1
//   action  n        the "bad" action B, owned by agent n
//   action  n+1      the "good" action G, owned by agent n
// f(S) = f1(S) + f2(S) - f3(S) with
//   f1 = max(1/2 * [G in S], eps * [B in S])
//   f2 = eps * min(|S - G|, n/2 + 1)
//   f3 = eps/2 * [S = A' + B].
inline ActionId hardnessBadAction(int n) { return n; }
inline ActionId hardnessGoodAction(int n) { return n + 1; }
inline AgentId hardnessPairAgent(int n) { return n; }

// The largest admissible eps, exclusive: min over the strict bounds
// (1-B)/(K(n+4)), 4n/B and the inclusive bound 1/(n+2); the caller must also
// keep eps^2 < 2B/n.
Rational hardnessEpsBound(int n, const Rational& budget, const Rational& approximation);
// Half the binding bound, halved further until eps^2 < 2B/n.
Rational defaultHardnessEps(int n, const Rational& budget, const Rational& approximation);

// Throws kOddN, kBadHiddenSetSize, kInvalidEpsilon or kInvalidArgument.
void validateHardnessSpec(const HardnessSpec& spec);

// Fills in eps with the default when it is zero.
HardnessSpec withDefaultEps(HardnessSpec spec);

OraclePtr makeHardnessOracle(const HardnessSpec& spec);

// The instance I^(A'): costs eps^3 per unit action, c_B = (3/2) eps B,
// c_G = (1/2)(B - (n/2) eps^2).
Instance buildHardness(const HardnessSpec& spec);

// Demand by the 12-candidate simulation. Prices of unit actions must be
// non-negative; other price vectors are answered exhaustively.
ActionSet hardnessDemand(const RewardOracle& hardnessOracle, const PriceVector& prices);

// shares eps^2 on A', B - (n/2) eps^2 on agent n; profile A' + G.
std::pair<Contract, ActionProfile> goodContract(const HardnessSpec& spec);

struct GapReport {
  bool holds = true;  // every other budget-feasible profile has f <= bound
  Rational bound;     // (n/2 + 2) eps
  Rational maxOtherValue;
  ActionProfile maxOtherProfile;
  std::optional<ActionProfile> violation;
  Rational gapRatio;  // ((1 - B)/2) / bound
  std::uint64_t profiles = 0;
  std::uint64_t feasibleProfiles = 0;
};
GapReport verifyGapExhaustive(const HardnessSpec& spec);

// True iff f^(A') and f1 + f2 agree on every queried set.
bool indistinguishabilityCheck(const HardnessSpec& spec, const std::vector<ActionSet>& queries);

// f1 + f2 on the same ground set (the instance without the hidden set).
OraclePtr makeHardnessBaseOracle(const HardnessSpec& spec);

// ---------------------------------------------------------------------------
// Hidden-set experiment.

using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection sampling; bound > 0.
std::uint64_t uniformBelow(Rng& rng, std::uint64_t bound);
// A uniformly random k-subset of {0, ..., n-1}, sorted.
std::vector<int> randomSubset(Rng& rng, int n, int k);

// Everything a solver under test may see: public parameters, costs and
// owners, and metered value and demand queries. The hidden set stays behind
// the oracle.
class QueryView {
 public:
  QueryView(const Instance& inst, std::uint64_t queryBudget,
            std::optional<std::vector<AgentId>> leak = std::nullopt);

  int n() const { return inst_.numAgents() - 1; }
  int numAgents() const { return inst_.numAgents(); }
  int numActions() const { return inst_.numActions(); }
  const Rational& cost(ActionId a) const { return inst_.cost(a); }
  AgentId owner(ActionId a) const { return inst_.owner(a); }

  // Throw kQueryBudgetExceeded once the value-query total passes the budget;
  // demand queries are charged their induced value queries.
  Rational value(ActionSet s);
  ActionSet demand(const PriceVector& prices);

  std::uint64_t valueQueries() const { return value_queries_; }
  std::uint64_t demandQueries() const { return demand_queries_; }
  // Only populated for the harness sanity check.
  const std::optional<std::vector<AgentId>>& leakedHidden() const { return leak_; }

 private:
  void charge(std::uint64_t before);

  const Instance& inst_;
  std::uint64_t budget_;
  std::uint64_t value_queries_ = 0;
  std::uint64_t demand_queries_ = 0;
  std::optional<std::vector<AgentId>> leak_;
};

using HardnessSolverFn = std::function<std::pair<Contract, ActionProfile>(
    QueryView& view, const HardnessSpec& publicParams, Rng& rng)>;

struct HardnessSolver {
  std::string name;
  HardnessSolverFn run;
  bool seesHiddenSet = false;
};

// Guesses a uniformly random n/2-subset and offers it the good contract.
HardnessSolver randomGuessSolver();
// Queries f(X + B) for n/2-subsets X in random order, looking for the one
// where f drops, and offers the good contract on it (random guess if the
// budget runs out first).
HardnessSolver querySearchSolver();
// Reads the hidden set from the view; the harness sanity check.
HardnessSolver cheatingSolver();

struct ExperimentTrial {
  int trial = 0;
  std::vector<AgentId> hidden;
  bool success = false;
  bool budgetExceeded = false;
  Rational approxRatio;  // principal profit / good-contract profit, 0 if invalid
  std::uint64_t valueQueries = 0;
  std::uint64_t demandQueries = 0;
};

struct ExperimentReport {
  std::string solver;
  int n = 0;
  Rational budget;
  Rational approximation;
  Rational eps;
  int trials = 0;
  std::uint64_t queryBudget = 0;
  int successes = 0;
  Rational baselineProb;  // 1 / C(n, n/2)
  Rational meanApproxRatio;
  std::vector<ExperimentTrial> rows;
};

// Public parameters: n, B, K and eps (the hidden field is ignored). A trial
// succeeds when the returned pair is budget feasible, a Nash equilibrium of
// the true instance, and K times its profit reaches the good-contract
// profit.
ExperimentReport adversaryExperiment(const HardnessSolver& solver, const HardnessSpec& params,
                                     int trials, std::uint64_t queryBudget, std::uint64_t seed);

}  // namespace combcontract

#endif  // COMBCONTRACT_HARDNESS_HPP_
