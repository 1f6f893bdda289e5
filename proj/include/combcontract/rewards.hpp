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

#ifndef COMBCONTRACT_REWARDS_HPP_
#define COMBCONTRACT_REWARDS_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "combcontract/id_set.hpp"
#include "combcontract/rational.hpp"

namespace combcontract {

// Default cap on the number of free items an enumeration may range over.
inline constexpr int kDefaultEnumCap = 20;

// Position in the additive < GS < submodular < general hierarchy that an
// oracle declares for itself. Solvers dispatch on this; testers verify it.
enum class FunctionClass { kAdditive, kGrossSubstitutes, kSubmodular, kGeneral };

std::string_view functionClassName(FunctionClass cls);
FunctionClass parseFunctionClass(std::string_view name);
// True when `cls` is at least as structured as `required`.
bool classAtLeast(FunctionClass cls, FunctionClass required);

// Prices for a demand query. Negative prices are allowed; `excluded` items
// are unpurchasable (an infinite price).
struct PriceVector {
  std::vector<Rational> price;
  ActionSet excluded;

  static PriceVector uniform(int groundSize, const Rational& p);
  ActionSet available() const;
};

struct QueryCounts {
  std::uint64_t value = 0;
  std::uint64_t demand = 0;
};

// ---------------------------------------------------------------------------
// Oracle descriptors. Each variant carries exactly the parameters needed to
// rebuild the oracle; the instance JSON embeds them.

struct AdditiveSpec {
  std::vector<Rational> weights;
};
struct UnitDemandSpec {
  std::vector<Rational> weights;
};
// f(S) = v * min(|S|, k).
struct UniformKDemandSpec {
  int groundSize = 0;
  int k = 1;
  Rational v;
};
// OXS: f(S) = max-weight matching of S into slots; values[action][slot].
struct AssignmentSpec {
  std::vector<std::vector<Rational>> values;
};
// f(S) = total weight of universe elements covered by S.
struct CoverageSpec {
  std::vector<Rational> elementWeights;
  std::vector<std::vector<int>> sets;  // per action, covered element ids
};
struct HardnessSpec {
  int n = 0;
  Rational budget;
  Rational approximation{1};  // K(n)
  Rational eps;
  std::vector<AgentId> hidden;  // A', 0-based among the n unit agents
};
// All 2^m values in subset-bitmask order.
struct ExplicitSpec {
  int groundSize = 0;
  std::vector<Rational> table;
  FunctionClass declared = FunctionClass::kGeneral;
};

using RewardSpec =
    std::variant<AdditiveSpec, UnitDemandSpec, UniformKDemandSpec,
                 AssignmentSpec, CoverageSpec, HardnessSpec, ExplicitSpec>;

// ---------------------------------------------------------------------------

// Value-query interface over subsets of the ground set {0, ..., m-1}.
//
// Oracles are immutable apart from their query counters, which are atomic,
// so one oracle may be shared by concurrent readers; the counts are then the
// totals across all of them.
class RewardOracle {
 public:
  RewardOracle(int groundSize, FunctionClass declared);
  RewardOracle(const RewardOracle&) = delete;
  RewardOracle& operator=(const RewardOracle&) = delete;
  virtual ~RewardOracle() = default;

  int groundSize() const { return ground_size_; }
  ActionSet groundSet() const { return ActionSet::range(ground_size_); }
  FunctionClass declaredClass() const { return declared_; }

  // f(S). One value query. Throws kUnknownActionId if S leaves the ground set.
  Rational value(ActionSet s) const;
  // f(S + a) - f(S). Two value queries. Throws kElementAlreadyPresent.
  Rational marginal(ActionId a, ActionSet s) const;
  // Some set maximizing f(S) - p(S). Uses the oracle's native demand routine
  // when it has one, the greedy algorithm when the oracle declares itself
  // gross substitutes, and exhaustive search otherwise. One demand query,
  // plus whatever value queries the simulation induces.
  ActionSet demand(const PriceVector& prices, int enumCap = kDefaultEnumCap) const;

  QueryCounts counts() const;
  void resetCounts() const;

  virtual RewardSpec spec() const = 0;

 protected:
  virtual Rational evaluate(ActionSet s) const = 0;
  virtual std::optional<ActionSet> nativeDemand(const PriceVector& prices) const;

 private:
  int ground_size_;
  FunctionClass declared_;
  mutable std::atomic<std::uint64_t> value_queries_{0};
  mutable std::atomic<std::uint64_t> demand_queries_{0};
};

using OraclePtr = std::shared_ptr<const RewardOracle>;

OraclePtr makeAdditive(std::vector<Rational> weights);
OraclePtr makeUnitDemand(std::vector<Rational> weights);
OraclePtr makeUniformKDemand(int groundSize, int k, Rational v);
OraclePtr makeAssignment(std::vector<std::vector<Rational>> values);
OraclePtr makeCoverage(std::vector<Rational> elementWeights,
                       std::vector<std::vector<int>> sets);
OraclePtr makeExplicit(int groundSize, std::vector<Rational> table,
                       FunctionClass declared = FunctionClass::kGeneral);
// Builds any descriptor, including the hardness composite.
OraclePtr makeOracle(const RewardSpec& spec);

// All 2^m values, indexed by mask. Costs 2^m value queries.
std::vector<Rational> tabulate(const RewardOracle& oracle);

// ---------------------------------------------------------------------------
// Demand computation.

// f(S) - p(S). Throws kInvalidArgument if S contains an excluded item.
Rational demandUtility(const RewardOracle& oracle, const PriceVector& prices,
                       ActionSet s);

// Exhaustive argmax of f(S) - p(S) over the non-excluded items; ties go to
// the lexicographically smallest set. Throws kGroundSetTooLarge when more
// than `enumCap` items are available.
ActionSet bruteForceDemand(const RewardOracle& oracle, const PriceVector& prices,
                           int enumCap = kDefaultEnumCap);

// Greedy demand: repeatedly add the available item with the largest
// strictly positive marginal utility (ties: smallest id). Exact for gross
// substitutes; for other classes it returns *some* set.
ActionSet gsGreedyDemand(const RewardOracle& oracle, const PriceVector& prices);

// base + X where X maximizes f(X | base) - p(X) over available items outside
// base. Greedy when the oracle declares itself GS (or additive), exhaustive
// otherwise.
ActionSet demandWithBase(const RewardOracle& oracle, const PriceVector& prices,
                         ActionSet base, int enumCap = kDefaultEnumCap);

// ---------------------------------------------------------------------------
// Class membership testers (exhaustive; small ground sets only).

struct MonotonicityReport {
  bool monotone = true;
  // f(set + item) < f(set) on failure.
  ActionSet set;
  ActionId item = -1;
};
MonotonicityReport checkMonotone(const RewardOracle& oracle, int maxGround = 16);

struct SubmodularityReport {
  bool submodular = true;
  // On failure: smaller ⊆ larger, item ∉ larger, and
  // f(item | smaller) < f(item | larger).
  ActionSet smaller;
  ActionSet larger;
  ActionId item = -1;
};
SubmodularityReport isSubmodular(const RewardOracle& oracle, int maxGround = 16);

struct GsWitness {
  PriceVector p;
  PriceVector q;      // q >= p coordinate-wise
  ActionSet demandAtP;  // a demand set at p
};
struct GsReport {
  bool grossSubstitutes = true;
  std::optional<GsWitness> witness;
};

// Decides gross substitutes exactly and, on failure, returns prices p <= q
// and a demand set S* at p such that every demand set at q drops an item of
// S* whose price did not change. The witness is re-verified by exhaustive
// demand before it is returned.
GsReport isGrossSubstitutes(const RewardOracle& oracle, int maxGround = 12);

// Checks a claimed witness by brute force. Exposed for tests.
bool verifyGsWitness(const RewardOracle& oracle, const GsWitness& witness);

}  // namespace combcontract

#endif  // COMBCONTRACT_REWARDS_HPP_
