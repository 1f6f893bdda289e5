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

#include "combcontract/errors.hpp"
#include "combcontract/solvers.hpp"

namespace combcontract {

namespace {

void checkEps(const Rational& eps) {
  if (eps.sign() <= 0 || eps >= Rational(1)) {
    fail(ErrorCode::kInvalidEpsilon, "eps must lie in (0, 1), got " + eps.str());
  }
}

void checkBudget(const Rational& budget) {
  if (budget.sign() < 0 || budget > Rational(1)) {
    fail(ErrorCode::kInvalidArgument, "budget must lie in [0, 1]");
  }
}

long toLong(const mpz_class& z) {
  if (!z.fits_slong_p()) fail(ErrorCode::kInvalidArgument, "discretized value does not fit");
  return z.get_si();
}

QueryCounts since(const Instance& inst, const QueryCounts& before) {
  const QueryCounts now = inst.oracle().counts();
  return QueryCounts{now.value - before.value, now.demand - before.demand};
}

}  // namespace

std::pair<Contract, ActionProfile> DpTable::reconstruct(int x) const {
  if (x < 0 || x >= columns || !payment.back()[x]) {
    fail(ErrorCode::kInvalidArgument, "no finite table entry at column " + std::to_string(x));
  }
  const int n = static_cast<int>(order.size());
  Contract alpha = Contract::zero(n);
  ActionProfile s;
  long col = x;
  for (int j = n; j >= 1; --j) {
    const int len = choice[j][col];
    long u = 0;
    for (int l = 0; l < len; ++l) {
      s.insert(order[j - 1][l]);
      u += units[j - 1][l];
    }
    if (len > 0) alpha.alpha[j - 1] = ratio[j - 1][len - 1];
    col = std::max(0L, col - u);
  }
  return {std::move(alpha), s};
}

DpTable buildDpTable(const Instance& inst, DpValue phi, const Rational& b, const Rational& eps,
                     const std::optional<Rational>& maxRatio) {
  if (inst.oracle().declaredClass() != FunctionClass::kAdditive) {
    fail(ErrorCode::kSolverMismatch, "the DP table needs an additive reward");
  }
  if (b.sign() <= 0) fail(ErrorCode::kInvalidArgument, "b must be positive");
  checkEps(eps);
  const int m = inst.numActions();
  const int n = inst.numAgents();

  DpTable t;
  t.phi = phi;
  t.step = eps / Rational(std::max(m, 1)) * b;
  t.order.resize(n);
  t.ratio.resize(n);
  t.units.resize(n);

  long totalUnits = 0;
  for (AgentId i = 0; i < n; ++i) {
    struct Item {
      ActionId id;
      Rational ratio;
      Rational phi;
    };
    std::vector<Item> items;
    for (ActionId a : inst.agentActions(i)) {
      const Rational fa = inst.oracle().value(ActionSet{a});
      if (fa.isZero()) continue;
      const Rational pa = phi == DpValue::kReward ? fa : fa - inst.cost(a);
      items.push_back(Item{a, inst.cost(a) / fa, pa});
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& x, const Item& y) { return x.ratio < y.ratio; });
    // A prefix stops before an action nobody can pay for, and before an
    // action worth more than the guess b (those sets belong to a larger b).
    for (const Item& it : items) {
      if ((maxRatio && *maxRatio < it.ratio) || b < it.phi) break;
      if (it.phi.sign() < 0) {
        fail(ErrorCode::kInvalidArgument, "phi is negative on a kept action; pass maxRatio <= 1");
      }
      const long u = toLong((it.phi / t.step).floor());
      t.order[i].push_back(it.id);
      t.ratio[i].push_back(it.ratio);
      t.units[i].push_back(u);
      totalUnits += u;
    }
  }
  // No profile reaches beyond the sum of all units, and that sum never
  // exceeds ceil(|T| / delta).
  t.columns = static_cast<int>(totalUnits) + 1;

  t.payment.assign(n + 1, std::vector<std::optional<Rational>>(t.columns));
  t.choice.assign(n + 1, std::vector<int>(t.columns, 0));
  t.payment[0][0] = Rational(0);
  for (int j = 1; j <= n; ++j) {
    const auto& prev = t.payment[j - 1];
    auto& row = t.payment[j];
    const int k = static_cast<int>(t.order[j - 1].size());
    long u = 0;
    for (int len = 0; len <= k; ++len) {
      if (len > 0) u += t.units[j - 1][len - 1];
      const Rational r = len > 0 ? t.ratio[j - 1][len - 1] : Rational(0);
      for (int x = 0; x < t.columns; ++x) {
        const auto& base = prev[std::max(0L, x - u)];
        if (!base) continue;
        Rational cand = *base + r;
        if (!row[x] || cand < *row[x]) {
          row[x] = std::move(cand);
          t.choice[j][x] = len;
        }
      }
    }
  }
  return t;
}

SolveResult additiveFptas(const Instance& inst, const Rational& budget, const Rational& eps,
                          const Objective& obj) {
  if (inst.oracle().declaredClass() != FunctionClass::kAdditive) {
    fail(ErrorCode::kSolverMismatch, "the additive FPTAS needs an additive reward");
  }
  if (obj.kind() == Objective::Kind::kCombo) {
    fail(ErrorCode::kSolverMismatch, "the additive FPTAS handles profit, reward or welfare only");
  }
  checkBudget(budget);
  checkEps(eps);
  const QueryCounts before = inst.oracle().counts();
  const DpValue phi = obj.kind() == Objective::Kind::kWelfare ? DpValue::kWelfare : DpValue::kReward;

  SolveResult best;
  best.solver = "additive-fptas";
  best.contract = Contract::zero(inst.numAgents());
  best.value = evaluate(obj, inst, best.contract, ActionSet{});
  best.certifiedFactor = (Rational(1) - eps).inverse();

  std::vector<Rational> guesses;
  for (ActionId a = 0; a < inst.numActions(); ++a) {
    const Rational fa = inst.oracle().value(ActionSet{a});
    if (fa.isZero() || budget < inst.cost(a) / fa) continue;
    Rational g = phi == DpValue::kReward ? fa : fa - inst.cost(a);
    if (g.sign() > 0 && std::find(guesses.begin(), guesses.end(), g) == guesses.end()) {
      guesses.push_back(std::move(g));
    }
  }
  std::sort(guesses.begin(), guesses.end());

  for (const Rational& b : guesses) {
    const DpTable t = buildDpTable(inst, phi, b, eps, budget);
    int xbar = 0;
    for (int x = 0; x < t.columns; ++x) {
      if (t.final(x) && *t.final(x) <= budget) xbar = x;
    }
    int pick = xbar;
    if (obj.kind() == Objective::Kind::kProfit) {
      Rational top;
      for (int x = 0; x <= xbar; ++x) {
        const Rational v = (Rational(1) - *t.final(x)) * Rational(x);
        if (x == 0 || top < v) {
          top = v;
          pick = x;
        }
      }
    }
    auto [alpha, s] = t.reconstruct(pick);
    Rational v = evaluate(obj, inst, alpha, s);
    if (best.value < v) {
      best.value = std::move(v);
      best.contract = std::move(alpha);
      best.profile = s;
    }
  }
  best.queries = since(inst, before);
  return best;
}

int singleAgentGridSize(int m, const Rational& eps) {
  checkEps(eps);
  if (m <= 0) return 0;
  if (m > 40) fail(ErrorCode::kGroundSetTooLarge, "grid size needs m <= 40");
  const Rational target = Rational(1) / Rational(static_cast<long>(m) << m);
  const Rational q = Rational(1) - eps;
  Rational power(1);
  int k = 0;
  while (target < power) {
    power *= q;
    ++k;
  }
  return k;
}

SolveResult singleAgentFptas(const Instance& inst, const Rational& budget, const Rational& eps,
                             int enumCap) {
  if (inst.numAgents() != 1) {
    fail(ErrorCode::kSolverMismatch, "the single-agent FPTAS needs exactly one agent");
  }
  checkBudget(budget);
  checkEps(eps);
  const int m = inst.numActions();
  if (m > enumCap) {
    fail(ErrorCode::kGroundSetTooLarge, "single agent has too many actions to enumerate");
  }
  const QueryCounts before = inst.oracle().counts();

  auto profitAt = [&](const Rational& a, ActionSet s) {
    return (Rational(1) - a) * inst.oracle().value(s);
  };

  SolveResult best;
  best.solver = "single-agent-fptas";
  best.certifiedFactor = (Rational(1) - eps).inverse();
  best.contract = Contract::zero(1);
  best.profile = favourableResponse(inst, 0, Rational(0), ActionSet{}, enumCap);
  best.value = profitAt(Rational(0), best.profile);

  if (budget.sign() > 0) {
    PriceVector prices = PriceVector::uniform(m, Rational(0));
    for (ActionId a = 0; a < m; ++a) prices.price[a] = inst.cost(a) / budget;
    const ActionSet dagger = inst.oracle().demand(prices, enumCap);
    const Rational sw = inst.oracle().value(dagger) - cost(inst, dagger);

    const int grid = singleAgentGridSize(m, eps);
    const Rational q = Rational(1) - eps;
    for (ActionId j = 0; j < m; ++j) {
      const Rational& cj = inst.cost(j);
      if (cj.isZero()) continue;
      const Rational frac = sw / (cj + sw);
      Rational power = q;
      for (int k = 0; k < grid; ++k, power *= q) {
        const Rational a = min(budget, Rational(1) - power * frac);
        const ActionSet s = favourableResponse(inst, 0, a, ActionSet{}, enumCap);
        Rational v = profitAt(a, s);
        if (best.value <= v) {
          best.value = std::move(v);
          best.contract.alpha[0] = a;
          best.profile = s;
        }
      }
    }
  }
  best.queries = since(inst, before);
  return best;
}

}  // namespace combcontract
