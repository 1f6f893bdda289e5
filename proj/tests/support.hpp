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

// Seeded instance generators and small reference oracles for the tests.
// The reference routines are written directly from the definitions and do
// not call the library's solvers or equilibrium code.
#ifndef COMBCONTRACT_TESTS_SUPPORT_HPP_
#define COMBCONTRACT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "combcontract/instance.hpp"
#include "combcontract/rewards.hpp"

namespace cctest {

using combcontract::ActionSet;
using combcontract::Contract;
using combcontract::Instance;
using combcontract::Rational;
using Rng = std::mt19937_64;

inline long uniformInt(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// k / den with k uniform in [lo, hi].
inline Rational randomRational(Rng& rng, long lo, long hi, long den) {
  return Rational(uniformInt(rng, lo, hi), den);
}

// Random owners with every agent owning at least one action (m >= n).
inline std::vector<int> randomOwners(Rng& rng, int n, int m) {
  std::vector<int> owners(m);
  for (int a = 0; a < m; ++a) owners[a] = a < n ? a : static_cast<int>(uniformInt(rng, 0, n - 1));
  std::shuffle(owners.begin(), owners.end(), rng);
  return owners;
}

inline Instance withOwners(int n, const std::vector<int>& owners,
                           const std::vector<Rational>& costs, combcontract::OraclePtr oracle) {
  std::vector<combcontract::Action> actions;
  for (std::size_t a = 0; a < owners.size(); ++a) {
    actions.push_back({static_cast<int>(a), owners[a], costs[a]});
  }
  Instance inst(n, std::move(actions), std::move(oracle));
  combcontract::validateInstance(inst);
  return inst;
}

// Costs near ratio * f({a}) so that thresholds spread over [0, ~1.2].
inline std::vector<Rational> costsNear(Rng& rng, const std::vector<Rational>& singles) {
  std::vector<Rational> costs;
  for (const Rational& s : singles) {
    costs.push_back(s * randomRational(rng, 0, 12, 10) + randomRational(rng, 0, 2, 100));
  }
  return costs;
}

inline std::vector<Rational> randomWeights(Rng& rng, int m) {
  std::vector<long> raw(m);
  long total = 0;
  for (long& r : raw) total += (r = uniformInt(rng, 0, 12));
  const long den = total + uniformInt(rng, 1, 8);
  std::vector<Rational> w;
  for (long r : raw) w.emplace_back(r, den);
  return w;
}

inline Instance randomAdditive(Rng& rng, int maxAgents = 4, int maxActions = 10) {
  const int n = static_cast<int>(uniformInt(rng, 1, maxAgents));
  const int m = static_cast<int>(uniformInt(rng, n, maxActions));
  std::vector<Rational> w = randomWeights(rng, m);
  return withOwners(n, randomOwners(rng, n, m), costsNear(rng, w), combcontract::makeAdditive(w));
}

inline Instance randomUnitDemand(Rng& rng, int maxAgents = 4, int maxActions = 10) {
  const int n = static_cast<int>(uniformInt(rng, 1, maxAgents));
  const int m = static_cast<int>(uniformInt(rng, n, maxActions));
  std::vector<Rational> w;
  for (int a = 0; a < m; ++a) w.push_back(randomRational(rng, 0, 20, 20));
  return withOwners(n, randomOwners(rng, n, m), costsNear(rng, w),
                    combcontract::makeUnitDemand(w));
}

inline Instance randomOxs(Rng& rng, int maxAgents = 4, int maxActions = 10, int maxSlots = 3) {
  const int n = static_cast<int>(uniformInt(rng, 1, maxAgents));
  const int m = static_cast<int>(uniformInt(rng, n, maxActions));
  const int slots = static_cast<int>(uniformInt(rng, 1, maxSlots));
  std::vector<std::vector<Rational>> values(m, std::vector<Rational>(slots));
  std::vector<Rational> singles(m);
  for (int a = 0; a < m; ++a) {
    for (int s = 0; s < slots; ++s) {
      values[a][s] = randomRational(rng, 0, 10, 10L * slots);
      singles[a] = combcontract::max(singles[a], values[a][s]);
    }
  }
  return withOwners(n, randomOwners(rng, n, m), costsNear(rng, singles),
                    combcontract::makeAssignment(values));
}

inline Instance randomCoverage(Rng& rng, int maxAgents = 3, int maxActions = 6) {
  const int n = static_cast<int>(uniformInt(rng, 1, maxAgents));
  const int m = static_cast<int>(uniformInt(rng, n, maxActions));
  const int elems = static_cast<int>(uniformInt(rng, 2, 8));
  std::vector<Rational> ew = randomWeights(rng, elems);
  std::vector<std::vector<int>> sets(m);
  std::vector<Rational> singles(m);
  for (int a = 0; a < m; ++a) {
    for (int e = 0; e < elems; ++e) {
      if (uniformInt(rng, 0, 2) == 0) {
        sets[a].push_back(e);
        singles[a] += ew[e];
      }
    }
  }
  return withOwners(n, randomOwners(rng, n, m), costsNear(rng, singles),
                    combcontract::makeCoverage(ew, sets));
}

// Random GS instance of one of the three GS families.
inline Instance randomGs(Rng& rng, int kind, int maxAgents = 4, int maxActions = 10) {
  switch (kind % 3) {
    case 0: return randomAdditive(rng, maxAgents, maxActions);
    case 1: return randomUnitDemand(rng, maxAgents, maxActions);
    default: return randomOxs(rng, maxAgents, maxActions);
  }
}

// Replaces zero costs by 1/100.
inline Instance withPositiveCosts(const Instance& inst) {
  std::vector<Rational> costs;
  for (int a = 0; a < inst.numActions(); ++a) {
    costs.push_back(inst.cost(a).isZero() ? Rational(1, 100) : inst.cost(a));
  }
  return inst.withCosts(costs);
}

// Monotone table with f(empty) = 0 and f <= 1.
inline std::vector<Rational> randomMonotoneTable(Rng& rng, int m) {
  const std::size_t size = std::size_t{1} << m;
  std::vector<long> raw(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    long base = 0;
    for (int a = 0; a < m; ++a) {
      if ((s >> a) & 1U) base = std::max(base, raw[s & ~(std::size_t{1} << a)]);
    }
    raw[s] = base + uniformInt(rng, 0, 6);
  }
  const long den = raw[size - 1] + uniformInt(rng, 1, 5);
  std::vector<Rational> t;
  for (long r : raw) t.emplace_back(r, den);
  return t;
}

// ---------------------------------------------------------------------------
// Reference oracles.

inline std::vector<Rational> valueTable(const Instance& inst) {
  std::vector<Rational> f(std::size_t{1} << inst.numActions());
  for (std::size_t s = 0; s < f.size(); ++s) f[s] = inst.oracle().value(ActionSet::fromMask(s));
  return f;
}

inline Rational costOf(const Instance& inst, std::uint64_t s) {
  Rational c;
  for (int a = 0; a < inst.numActions(); ++a) {
    if ((s >> a) & 1U) c += inst.cost(a);
  }
  return c;
}

inline std::uint64_t ownMask(const Instance& inst, int i) { return inst.agentActions(i).mask(); }

// No agent gains by switching to any subset of its own actions.
inline bool refIsNash(const Instance& inst, const std::vector<Rational>& f, const Contract& alpha,
                      std::uint64_t s) {
  for (int i = 0; i < inst.numAgents(); ++i) {
    const std::uint64_t ti = ownMask(inst, i);
    const std::uint64_t rest = s & ~ti;
    const Rational now = alpha.alpha[i] * f[s] - costOf(inst, s & ti);
    for (std::uint64_t x = ti;; x = (x - 1) & ti) {
      if (now < alpha.alpha[i] * f[rest | x] - costOf(inst, x)) return false;
      if (x == 0) break;
    }
  }
  return true;
}

// Least contract with S in NE, or nullopt. Each share is the largest
// ratio (c(S_i) - c(X)) / (f(S) - f(X + S_-i)) over deviations that lose
// reward; the candidate is then confirmed by refIsNash.
inline std::optional<Contract> refMinContract(const Instance& inst, const std::vector<Rational>& f,
                                              std::uint64_t s) {
  Contract alpha = Contract::zero(inst.numAgents());
  for (int i = 0; i < inst.numAgents(); ++i) {
    const std::uint64_t ti = ownMask(inst, i);
    const std::uint64_t rest = s & ~ti;
    const Rational own = costOf(inst, s & ti);
    for (std::uint64_t x = ti;; x = (x - 1) & ti) {
      const Rational df = f[s] - f[rest | x];
      if (df.sign() > 0) alpha.alpha[i] = combcontract::max(alpha.alpha[i], (own - costOf(inst, x)) / df);
      if (x == 0) break;
    }
  }
  if (!refIsNash(inst, f, alpha, s)) return std::nullopt;
  return alpha;
}

struct RefOpt {
  Rational value;
  Contract alpha;
  std::uint64_t profile = 0;
};

// phi(totalShare, f, c). perAgentCap bounds every share when set.
inline RefOpt refOptimum(const Instance& inst, const std::vector<Rational>& f,
                         const Rational& budget,
                         const std::function<Rational(const Rational&, const Rational&,
                                                      const Rational&)>& phi,
                         std::optional<Rational> perAgentCap = std::nullopt,
                         std::optional<int> onlyAgent = std::nullopt) {
  RefOpt best{phi(Rational(0), f[0], Rational(0)), Contract::zero(inst.numAgents()), 0};
  for (std::uint64_t s = 1; s < f.size(); ++s) {
    if (onlyAgent && (s & ~ownMask(inst, *onlyAgent)) != 0) continue;
    auto alpha = refMinContract(inst, f, s);
    if (!alpha || budget < alpha->total()) continue;
    bool ok = true;
    if (perAgentCap) {
      for (const Rational& a : alpha->alpha) ok = ok && a <= *perAgentCap;
    }
    if (!ok) continue;
    Rational v = phi(alpha->total(), f[s], costOf(inst, s));
    if (best.value < v) best = RefOpt{v, *alpha, s};
  }
  return best;
}

inline Rational refProfit(const Rational& t, const Rational& f, const Rational&) {
  return (Rational(1) - t) * f;
}
inline Rational refReward(const Rational&, const Rational& f, const Rational&) { return f; }
inline Rational refWelfare(const Rational&, const Rational& f, const Rational& c) { return f - c; }

// max f(S) - p(S) over available sets, by enumeration.
inline Rational refDemandUtility(const combcontract::RewardOracle& oracle,
                                 const combcontract::PriceVector& p) {
  const ActionSet avail = combcontract::ActionSet::range(oracle.groundSize()) - p.excluded;
  std::optional<Rational> best;
  const std::uint64_t full = avail.mask();
  for (std::uint64_t x = full;; x = (x - 1) & full) {
    Rational u = oracle.value(ActionSet::fromMask(x));
    for (int a = 0; a < oracle.groundSize(); ++a) {
      if ((x >> a) & 1U) u -= p.price[a];
    }
    if (!best || *best < u) best = u;
    if (x == 0) break;
  }
  return *best;
}

inline Rational utilityAt(const combcontract::RewardOracle& oracle,
                          const combcontract::PriceVector& p, ActionSet s) {
  Rational u = oracle.value(s);
  for (int a : s) u -= p.price[a];
  return u;
}

}  // namespace cctest

#endif  // COMBCONTRACT_TESTS_SUPPORT_HPP_
