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

#include <algorithm>
#include <string>
#include <vector>

#include "combcontract/errors.hpp"
#include "combcontract/rewards.hpp"

namespace combcontract {

namespace {

std::vector<Rational> tableFor(const RewardOracle& oracle, int maxGround) {
  if (oracle.groundSize() > maxGround) {
    fail(ErrorCode::kGroundSetTooLarge,
         "tester supports at most " + std::to_string(maxGround) + " items, oracle has " +
             std::to_string(oracle.groundSize()));
  }
  return tabulate(oracle);
}

// Every set maximizing f(S) - p(S) among the available items.
std::vector<ActionSet> allDemandSets(const std::vector<Rational>& table, const PriceVector& prices) {
  std::vector<ActionSet> best_sets;
  std::optional<Rational> best;
  forEachSubset(prices.available(), [&](ActionSet s) {
    Rational u = table[s.mask()];
    for (ActionId a : s) u -= prices.price[a];
    if (!best || *best < u) {
      best = std::move(u);
      best_sets.assign(1, s);
    } else if (*best == u) {
      best_sets.push_back(s);
    }
  });
  return best_sets;
}

// Local exchange conditions around S on distinct items a, b (and c).
// g(X) = f(S + X) - f(S).
struct Local {
  const std::vector<Rational>& table;
  ActionSet base;
  Rational g(std::initializer_list<ActionId> items) const {
    ActionSet s = base;
    for (ActionId a : items) s.insert(a);
    return table[s.mask()] - table[base.mask()];
  }
};

// Prices that put every item of `forced` into every demand set and keep all
// other items out, until the caller overrides them: anything beyond twice the
// largest |f| does it.
struct PriceFrame {
  Rational big;  // strictly more than any change in f
  PriceVector make(int m, ActionSet forced) const {
    PriceVector p = PriceVector::uniform(m, big);
    for (ActionId a : forced) p.price[a] = -big;
    return p;
  }
};

PriceFrame frameFor(const std::vector<Rational>& table) {
  Rational largest;
  for (const Rational& v : table) largest = max(largest, v.abs());
  return PriceFrame{largest * Rational(2) + Rational(1)};
}

GsWitness pairWitness(const std::vector<Rational>& table, int m, ActionSet s, ActionId a,
                      ActionId b) {
  const Local local{table, s};
  const PriceFrame frame = frameFor(table);
  const Rational theta = (local.g({a, b}) - local.g({a}) - local.g({b})) / Rational(3);
  GsWitness w;
  w.p = frame.make(m, s);
  w.p.price[a] = local.g({a}) + theta;
  w.p.price[b] = local.g({b}) + theta;
  w.q = w.p;
  w.q.price[b] = frame.big;
  w.demandAtP = s.with(a).with(b);
  return w;
}

GsWitness tripleWitness(const std::vector<Rational>& table, int m, ActionSet s, ActionId a,
                        ActionId b, ActionId c) {
  const Local local{table, s};
  const PriceFrame frame = frameFor(table);
  // a is bought at p for sure and priced out at q; b and c get prices x, y
  // chosen so that {a, b} is demanded at p while only c survives at q.
  const Rational d = local.g({a, b}) - local.g({a, c});
  const Rational lo = max(local.g({a, b, c}) - local.g({a, b}), local.g({b, c}) - local.g({c}) - d);
  const Rational hi = min(local.g({c}), local.g({a, b}) - local.g({a}) - d);
  const Rational y = (lo + hi) / Rational(2);
  GsWitness w;
  w.p = frame.make(m, s.with(a));
  w.p.price[b] = y + d;
  w.p.price[c] = y;
  w.q = w.p;
  w.q.price[a] = frame.big;
  w.demandAtP = s.with(a).with(b);
  return w;
}

}  // namespace

MonotonicityReport checkMonotone(const RewardOracle& oracle, int maxGround) {
  const std::vector<Rational> table = tableFor(oracle, maxGround);
  const int m = oracle.groundSize();
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    for (ActionId a = 0; a < m; ++a) {
      if ((mask >> a) & 1U) continue;
      if (table[mask | (std::uint64_t{1} << a)] < table[mask]) {
        return MonotonicityReport{false, ActionSet::fromMask(mask), a};
      }
    }
  }
  return {};
}

SubmodularityReport isSubmodular(const RewardOracle& oracle, int maxGround) {
  const std::vector<Rational> table = tableFor(oracle, maxGround);
  const int m = oracle.groundSize();
  // Pairwise form: f(S+a) + f(S+b) >= f(S+a+b) + f(S) for all S and a, b outside S.
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    for (ActionId a = 0; a < m; ++a) {
      if ((mask >> a) & 1U) continue;
      for (ActionId b = 0; b < m; ++b) {
        if (b == a || ((mask >> b) & 1U)) continue;
        const std::uint64_t sa = mask | (std::uint64_t{1} << a);
        const std::uint64_t sb = mask | (std::uint64_t{1} << b);
        if (table[sa] - table[mask] < table[sa | sb] - table[sb]) {
          return SubmodularityReport{false, ActionSet::fromMask(mask), ActionSet::fromMask(sb), a};
        }
      }
    }
  }
  return {};
}

bool verifyGsWitness(const RewardOracle& oracle, const GsWitness& w) {
  const int m = oracle.groundSize();
  if (static_cast<int>(w.p.price.size()) != m || static_cast<int>(w.q.price.size()) != m) {
    return false;
  }
  ActionSet unchanged;
  for (ActionId a = 0; a < m; ++a) {
    const bool px = w.p.excluded.contains(a);
    const bool qx = w.q.excluded.contains(a);
    if (px && !qx) return false;
    if (!px && !qx && w.q.price[a] < w.p.price[a]) return false;
    if ((px && qx) || (!px && !qx && w.q.price[a] == w.p.price[a])) unchanged.insert(a);
  }
  const std::vector<Rational> table = tabulate(oracle);
  const std::vector<ActionSet> at_p = allDemandSets(table, w.p);
  if (std::find(at_p.begin(), at_p.end(), w.demandAtP) == at_p.end()) return false;
  const ActionSet keep = w.demandAtP & unchanged;
  for (ActionSet s : allDemandSets(table, w.q)) {
    if (keep.subsetOf(s)) return false;
  }
  return true;
}

GsReport isGrossSubstitutes(const RewardOracle& oracle, int maxGround) {
  const std::vector<Rational> table = tableFor(oracle, maxGround);
  const int m = oracle.groundSize();
  auto confirmed = [&](GsWitness w) {
    if (!verifyGsWitness(oracle, w)) {
      fail(ErrorCode::kInternal, "constructed gross-substitutes witness failed to verify");
    }
    return GsReport{false, std::move(w)};
  };

  // Local characterization of gross substitutes: for every S and distinct
  // a, b, c outside S,
  //   (i)  f(S+ab) + f(S) <= f(S+a) + f(S+b)
  //   (ii) f(S+ab) + f(S+c) <= max(f(S+ac) + f(S+b), f(S+bc) + f(S+a)).
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    const ActionSet s = ActionSet::fromMask(mask);
    const Local local{table, s};
    for (ActionId a = 0; a < m; ++a) {
      if (s.contains(a)) continue;
      for (ActionId b = a + 1; b < m; ++b) {
        if (s.contains(b)) continue;
        if (local.g({a, b}) > local.g({a}) + local.g({b})) {
          return confirmed(pairWitness(table, m, s, a, b));
        }
      }
    }
  }
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    const ActionSet s = ActionSet::fromMask(mask);
    const Local local{table, s};
    for (ActionId a = 0; a < m; ++a) {
      if (s.contains(a)) continue;
      for (ActionId b = a + 1; b < m; ++b) {
        if (s.contains(b)) continue;
        for (ActionId c = 0; c < m; ++c) {
          if (c == a || c == b || s.contains(c)) continue;
          const Rational lhs = local.g({a, b}) + local.g({c});
          const Rational left = local.g({a, c}) + local.g({b});
          const Rational right = local.g({b, c}) + local.g({a});
          if (lhs > max(left, right)) {
            return confirmed(tripleWitness(table, m, s, a, b, c));
          }
        }
      }
    }
  }
  return {};
}

}  // namespace combcontract
