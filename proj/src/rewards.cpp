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

#include "combcontract/rewards.hpp"

#include <algorithm>
#include <string>

#include "combcontract/errors.hpp"

namespace combcontract {

std::string_view functionClassName(FunctionClass cls) {
  switch (cls) {
    case FunctionClass::kAdditive: return "additive";
    case FunctionClass::kGrossSubstitutes: return "gs";
    case FunctionClass::kSubmodular: return "submodular";
    case FunctionClass::kGeneral: return "general";
  }
  return "general";
}

FunctionClass parseFunctionClass(std::string_view name) {
  if (name == "additive") return FunctionClass::kAdditive;
  if (name == "gs" || name == "gross-substitutes") return FunctionClass::kGrossSubstitutes;
  if (name == "submodular") return FunctionClass::kSubmodular;
  if (name == "general") return FunctionClass::kGeneral;
  fail(ErrorCode::kSchemaError, "unknown function class '" + std::string(name) + "'");
}

bool classAtLeast(FunctionClass cls, FunctionClass required) {
  return static_cast<int>(cls) <= static_cast<int>(required);
}

PriceVector PriceVector::uniform(int groundSize, const Rational& p) {
  return PriceVector{std::vector<Rational>(static_cast<std::size_t>(groundSize), p), {}};
}

ActionSet PriceVector::available() const {
  return ActionSet::range(static_cast<int>(price.size())) - excluded;
}

// ---------------------------------------------------------------------------

RewardOracle::RewardOracle(int groundSize, FunctionClass declared)
    : ground_size_(groundSize), declared_(declared) {
  if (groundSize < 0 || groundSize > kMaxIds) {
    fail(ErrorCode::kInvalidArgument, "ground set size must be in [0, 64]");
  }
}

Rational RewardOracle::value(ActionSet s) const {
  if (!s.subsetOf(groundSet())) {
    fail(ErrorCode::kUnknownActionId, "value query outside the ground set");
  }
  value_queries_.fetch_add(1, std::memory_order_relaxed);
  return evaluate(s);
}

Rational RewardOracle::marginal(ActionId a, ActionSet s) const {
  if (a < 0 || a >= ground_size_) {
    fail(ErrorCode::kUnknownActionId, "unknown action " + std::to_string(a));
  }
  if (s.contains(a)) {
    fail(ErrorCode::kElementAlreadyPresent,
         "action " + std::to_string(a) + " is already in the set");
  }
  return value(s.with(a)) - value(s);
}

ActionSet RewardOracle::demand(const PriceVector& prices, int enumCap) const {
  if (static_cast<int>(prices.price.size()) != ground_size_) {
    fail(ErrorCode::kInvalidArgument, "price vector has the wrong length");
  }
  demand_queries_.fetch_add(1, std::memory_order_relaxed);
  if (auto native = nativeDemand(prices)) return *native;
  if (classAtLeast(declared_, FunctionClass::kGrossSubstitutes)) {
    return gsGreedyDemand(*this, prices);
  }
  return bruteForceDemand(*this, prices, enumCap);
}

std::optional<ActionSet> RewardOracle::nativeDemand(const PriceVector&) const {
  return std::nullopt;
}

QueryCounts RewardOracle::counts() const {
  return QueryCounts{value_queries_.load(std::memory_order_relaxed),
                     demand_queries_.load(std::memory_order_relaxed)};
}

void RewardOracle::resetCounts() const {
  value_queries_.store(0, std::memory_order_relaxed);
  demand_queries_.store(0, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------

namespace {

void requireNonNegative(const std::vector<Rational>& values, const char* what) {
  for (const Rational& v : values) {
    if (v.sign() < 0) {
      fail(ErrorCode::kOracleRangeViolation, std::string(what) + " must be non-negative");
    }
  }
}

class AdditiveOracle final : public RewardOracle {
 public:
  explicit AdditiveOracle(std::vector<Rational> weights)
      : RewardOracle(static_cast<int>(weights.size()), FunctionClass::kAdditive),
        weights_(std::move(weights)) {
    requireNonNegative(weights_, "additive weights");
  }
  RewardSpec spec() const override { return AdditiveSpec{weights_}; }

 protected:
  Rational evaluate(ActionSet s) const override {
    Rational total;
    for (ActionId a : s) total += weights_[a];
    return total;
  }

 private:
  std::vector<Rational> weights_;
};

class UnitDemandOracle final : public RewardOracle {
 public:
  explicit UnitDemandOracle(std::vector<Rational> weights)
      : RewardOracle(static_cast<int>(weights.size()), FunctionClass::kGrossSubstitutes),
        weights_(std::move(weights)) {
    requireNonNegative(weights_, "unit-demand weights");
  }
  RewardSpec spec() const override { return UnitDemandSpec{weights_}; }

 protected:
  Rational evaluate(ActionSet s) const override {
    Rational best;
    for (ActionId a : s) best = max(best, weights_[a]);
    return best;
  }

 private:
  std::vector<Rational> weights_;
};

class UniformKDemandOracle final : public RewardOracle {
 public:
  UniformKDemandOracle(int groundSize, int k, Rational v)
      : RewardOracle(groundSize, FunctionClass::kGrossSubstitutes), k_(k), v_(std::move(v)) {
    if (k_ < 0) fail(ErrorCode::kInvalidArgument, "k must be non-negative");
    if (v_.sign() < 0) fail(ErrorCode::kOracleRangeViolation, "v must be non-negative");
  }
  RewardSpec spec() const override { return UniformKDemandSpec{groundSize(), k_, v_}; }

 protected:
  Rational evaluate(ActionSet s) const override {
    return v_ * Rational(std::min(s.size(), k_));
  }

 private:
  int k_;
  Rational v_;
};

class AssignmentOracle final : public RewardOracle {
 public:
  explicit AssignmentOracle(std::vector<std::vector<Rational>> values)
      : RewardOracle(static_cast<int>(values.size()), FunctionClass::kGrossSubstitutes),
        values_(std::move(values)) {
    slots_ = values_.empty() ? 0 : static_cast<int>(values_.front().size());
    if (slots_ > 16) fail(ErrorCode::kInvalidArgument, "at most 16 assignment slots");
    for (const auto& row : values_) {
      if (static_cast<int>(row.size()) != slots_) {
        fail(ErrorCode::kSchemaError, "assignment matrix rows must have equal length");
      }
      requireNonNegative(row, "assignment values");
    }
  }
  RewardSpec spec() const override { return AssignmentSpec{values_}; }

 protected:
  // Max-weight matching of S into the slots, by DP over used-slot masks.
  Rational evaluate(ActionSet s) const override {
    const std::size_t states = std::size_t{1} << slots_;
    std::vector<std::optional<Rational>> best(states);
    best[0] = Rational(0);
    for (ActionId a : s) {
      std::vector<std::optional<Rational>> next = best;
      for (std::size_t used = 0; used < states; ++used) {
        if (!best[used]) continue;
        for (int slot = 0; slot < slots_; ++slot) {
          if ((used >> slot) & 1U) continue;
          const std::size_t to = used | (std::size_t{1} << slot);
          Rational candidate = *best[used] + values_[a][slot];
          if (!next[to] || *next[to] < candidate) next[to] = std::move(candidate);
        }
      }
      best = std::move(next);
    }
    Rational out;
    for (const auto& v : best) {
      if (v && out < *v) out = *v;
    }
    return out;
  }

 private:
  std::vector<std::vector<Rational>> values_;
  int slots_ = 0;
};

class CoverageOracle final : public RewardOracle {
 public:
  CoverageOracle(std::vector<Rational> elementWeights, std::vector<std::vector<int>> sets)
      : RewardOracle(static_cast<int>(sets.size()), FunctionClass::kSubmodular),
        weights_(std::move(elementWeights)),
        sets_(std::move(sets)) {
    requireNonNegative(weights_, "coverage element weights");
    if (weights_.size() > 64) fail(ErrorCode::kInvalidArgument, "at most 64 universe elements");
    for (const auto& set : sets_) {
      std::uint64_t mask = 0;
      for (int e : set) {
        if (e < 0 || e >= static_cast<int>(weights_.size())) {
          fail(ErrorCode::kSchemaError, "coverage set names an unknown element");
        }
        mask |= std::uint64_t{1} << e;
      }
      masks_.push_back(mask);
    }
  }
  RewardSpec spec() const override { return CoverageSpec{weights_, sets_}; }

 protected:
  Rational evaluate(ActionSet s) const override {
    std::uint64_t covered = 0;
    for (ActionId a : s) covered |= masks_[a];
    Rational total;
    for (int e = 0; covered != 0; ++e, covered >>= 1) {
      if (covered & 1U) total += weights_[e];
    }
    return total;
  }

 private:
  std::vector<Rational> weights_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::uint64_t> masks_;
};

class ExplicitOracle final : public RewardOracle {
 public:
  ExplicitOracle(int groundSize, std::vector<Rational> table, FunctionClass declared)
      : RewardOracle(groundSize, declared), table_(std::move(table)) {
    if (groundSize > 24) fail(ErrorCode::kGroundSetTooLarge, "explicit tables need m <= 24");
    if (table_.size() != (std::size_t{1} << groundSize)) {
      fail(ErrorCode::kSchemaError, "explicit table must list all 2^m values");
    }
  }
  RewardSpec spec() const override {
    return ExplicitSpec{groundSize(), table_, declaredClass()};
  }

 protected:
  Rational evaluate(ActionSet s) const override { return table_[s.mask()]; }

 private:
  std::vector<Rational> table_;
};

}  // namespace

OraclePtr makeAdditive(std::vector<Rational> weights) {
  return std::make_shared<AdditiveOracle>(std::move(weights));
}
OraclePtr makeUnitDemand(std::vector<Rational> weights) {
  return std::make_shared<UnitDemandOracle>(std::move(weights));
}
OraclePtr makeUniformKDemand(int groundSize, int k, Rational v) {
  return std::make_shared<UniformKDemandOracle>(groundSize, k, std::move(v));
}
OraclePtr makeAssignment(std::vector<std::vector<Rational>> values) {
  return std::make_shared<AssignmentOracle>(std::move(values));
}
OraclePtr makeCoverage(std::vector<Rational> elementWeights, std::vector<std::vector<int>> sets) {
  return std::make_shared<CoverageOracle>(std::move(elementWeights), std::move(sets));
}
OraclePtr makeExplicit(int groundSize, std::vector<Rational> table, FunctionClass declared) {
  return std::make_shared<ExplicitOracle>(groundSize, std::move(table), declared);
}

std::vector<Rational> tabulate(const RewardOracle& oracle) {
  if (oracle.groundSize() > 24) {
    fail(ErrorCode::kGroundSetTooLarge, "cannot tabulate more than 2^24 values");
  }
  std::vector<Rational> table(std::size_t{1} << oracle.groundSize());
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = oracle.value(ActionSet::fromMask(mask));
  }
  return table;
}

// ---------------------------------------------------------------------------

namespace {

Rational priceOf(const PriceVector& prices, ActionSet s) {
  Rational total;
  for (ActionId a : s) total += prices.price[a];
  return total;
}

void checkPrices(const RewardOracle& oracle, const PriceVector& prices) {
  if (static_cast<int>(prices.price.size()) != oracle.groundSize()) {
    fail(ErrorCode::kInvalidArgument, "price vector has the wrong length");
  }
}

}  // namespace

Rational demandUtility(const RewardOracle& oracle, const PriceVector& prices, ActionSet s) {
  checkPrices(oracle, prices);
  if (s.intersects(prices.excluded)) {
    fail(ErrorCode::kInvalidArgument, "set contains an excluded item");
  }
  return oracle.value(s) - priceOf(prices, s);
}

ActionSet bruteForceDemand(const RewardOracle& oracle, const PriceVector& prices, int enumCap) {
  return demandWithBase(oracle, prices, ActionSet{}, enumCap);
}

ActionSet gsGreedyDemand(const RewardOracle& oracle, const PriceVector& prices) {
  checkPrices(oracle, prices);
  ActionSet chosen;
  ActionSet remaining = prices.available();
  while (!remaining.empty()) {
    const Rational base = oracle.value(chosen);
    std::optional<Rational> best_gain;
    ActionId best_item = -1;
    for (ActionId a : remaining) {
      Rational gain = oracle.value(chosen.with(a)) - base - prices.price[a];
      if (gain.sign() > 0 && (!best_gain || *best_gain < gain)) {
        best_gain = std::move(gain);
        best_item = a;
      }
    }
    if (best_item < 0) break;
    chosen.insert(best_item);
    remaining.erase(best_item);
  }
  return chosen;
}

namespace {

ActionSet greedyFromBase(const RewardOracle& oracle, const PriceVector& prices, ActionSet base) {
  ActionSet chosen = base;
  ActionSet remaining = prices.available() - base;
  while (!remaining.empty()) {
    const Rational current = oracle.value(chosen);
    std::optional<Rational> best_gain;
    ActionId best_item = -1;
    for (ActionId a : remaining) {
      Rational gain = oracle.value(chosen.with(a)) - current - prices.price[a];
      if (gain.sign() > 0 && (!best_gain || *best_gain < gain)) {
        best_gain = std::move(gain);
        best_item = a;
      }
    }
    if (best_item < 0) break;
    chosen.insert(best_item);
    remaining.erase(best_item);
  }
  return chosen;
}

}  // namespace

ActionSet demandWithBase(const RewardOracle& oracle, const PriceVector& prices, ActionSet base,
                         int enumCap) {
  checkPrices(oracle, prices);
  if (!base.subsetOf(oracle.groundSet())) {
    fail(ErrorCode::kUnknownActionId, "base leaves the ground set");
  }
  if (classAtLeast(oracle.declaredClass(), FunctionClass::kGrossSubstitutes) && !base.empty()) {
    return greedyFromBase(oracle, prices, base);
  }
  const ActionSet free = prices.available() - base;
  if (free.size() > enumCap) {
    fail(ErrorCode::kGroundSetTooLarge,
         "exhaustive demand over " + std::to_string(free.size()) + " items exceeds cap " +
             std::to_string(enumCap));
  }
  std::optional<Rational> best;
  ActionSet best_set;
  forEachSubset(free, [&](ActionSet extra) {
    Rational u = oracle.value(base | extra) - priceOf(prices, extra);
    if (!best || *best < u || (*best == u && lexLess(extra, best_set))) {
      best = std::move(u);
      best_set = extra;
    }
  });
  return base | best_set;
}

}  // namespace combcontract
