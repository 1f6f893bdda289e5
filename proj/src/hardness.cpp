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

#include "combcontract/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "combcontract/errors.hpp"

namespace combcontract {

namespace {

class HardnessOracle final : public RewardOracle {
 public:
  HardnessOracle(HardnessSpec spec, bool withHidden)
      : RewardOracle(spec.n + 2, FunctionClass::kSubmodular),
        spec_(std::move(spec)),
        with_hidden_(withHidden) {
    for (AgentId i : spec_.hidden) hidden_mask_ |= std::uint64_t{1} << i;
    hidden_mask_ |= std::uint64_t{1} << hardnessBadAction(spec_.n);
  }

  RewardSpec spec() const override { return spec_; }

  // Candidate-set simulation; needs non-negative prices on the unit actions.
  std::optional<ActionSet> simulate(const PriceVector& prices) const {
    const int n = spec_.n;
    std::vector<ActionId> order;
    for (ActionId a = 0; a < n; ++a) {
      if (prices.excluded.contains(a)) continue;
      if (prices.price[a].sign() < 0) return std::nullopt;
      order.push_back(a);
    }
    std::stable_sort(order.begin(), order.end(), [&](ActionId x, ActionId y) {
      return prices.price[x] < prices.price[y];
    });
    int k = 0;
    while (k < static_cast<int>(order.size()) && prices.price[order[k]] < spec_.eps) ++k;
    const int tau = std::min(k, n / 2 + 1);

    auto prefix = [&](int len) {
      ActionSet s;
      for (int t = 0; t < len; ++t) s.insert(order[t]);
      return s;
    };
    std::vector<ActionSet> units{prefix(tau)};
    if (tau >= 1) units.push_back(prefix(tau - 1));
    if (tau >= 2) units.push_back(prefix(tau - 2).with(order[tau - 1]));

    const ActionId bad = hardnessBadAction(n);
    const ActionId good = hardnessGoodAction(n);
    const ActionSet extras[] = {ActionSet{}, ActionSet{good}, ActionSet{bad}, ActionSet{good, bad}};

    std::optional<Rational> best;
    ActionSet best_set;
    for (ActionSet u : units) {
      for (ActionSet e : extras) {
        const ActionSet s = u | e;
        if (s.intersects(prices.excluded)) continue;
        Rational utility = value(s);
        for (ActionId a : s) utility -= prices.price[a];
        if (!best || *best < utility || (*best == utility && lexLess(s, best_set))) {
          best = std::move(utility);
          best_set = s;
        }
      }
    }
    return best_set;
  }

 protected:
  Rational evaluate(ActionSet s) const override {
    const int n = spec_.n;
    const ActionId bad = hardnessBadAction(n);
    const ActionId good = hardnessGoodAction(n);
    Rational f1;
    if (s.contains(good)) {
      f1 = Rational(1, 2);
    } else if (s.contains(bad)) {
      f1 = spec_.eps;
    }
    const int counted = s.without(good).size();
    Rational f = f1 + spec_.eps * Rational(std::min(counted, n / 2 + 1));
    if (with_hidden_ && s.mask() == hidden_mask_) f -= spec_.eps / Rational(2);
    return f;
  }

  std::optional<ActionSet> nativeDemand(const PriceVector& prices) const override {
    return simulate(prices);
  }

 private:
  HardnessSpec spec_;
  bool with_hidden_;
  std::uint64_t hidden_mask_ = 0;
};

Rational binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return fromInteger(out);
}

}  // namespace

Rational hardnessEpsBound(int n, const Rational& budget, const Rational& approximation) {
  const Rational a = (Rational(1) - budget) / (approximation * Rational(n + 4));
  const Rational b = Rational(4L * n) / budget;
  const Rational c = Rational(1, n + 2);
  return min(min(a, b), c);
}

Rational defaultHardnessEps(int n, const Rational& budget, const Rational& approximation) {
  Rational eps = hardnessEpsBound(n, budget, approximation) / Rational(2);
  const Rational cap = Rational(2) * budget / Rational(n);
  while (eps * eps >= cap) eps /= Rational(2);
  return eps;
}

void validateHardnessSpec(const HardnessSpec& spec) {
  if (spec.n <= 0 || spec.n + 2 > kMaxIds) {
    fail(ErrorCode::kInvalidArgument, "n must be in [2, 62]");
  }
  if (spec.n % 2 != 0) fail(ErrorCode::kOddN, "n must be even, got " + std::to_string(spec.n));
  if (spec.budget.sign() <= 0 || spec.budget >= Rational(1)) {
    fail(ErrorCode::kInvalidArgument, "B must lie in (0, 1)");
  }
  if (spec.approximation < Rational(1)) fail(ErrorCode::kInvalidArgument, "K must be >= 1");
  if (static_cast<int>(spec.hidden.size()) != spec.n / 2) {
    fail(ErrorCode::kBadHiddenSetSize, "hidden set must have n/2 = " +
                                           std::to_string(spec.n / 2) + " agents, got " +
                                           std::to_string(spec.hidden.size()));
  }
  AgentSet seen;
  for (AgentId i : spec.hidden) {
    if (i < 0 || i >= spec.n || seen.contains(i)) {
      fail(ErrorCode::kBadHiddenSetSize, "hidden set must hold n/2 distinct unit agents");
    }
    seen.insert(i);
  }
  const Rational& eps = spec.eps;
  const Rational strict = min((Rational(1) - spec.budget) /
                                  (spec.approximation * Rational(spec.n + 4)),
                              Rational(4L * spec.n) / spec.budget);
  if (eps.sign() <= 0 || eps >= strict || eps > Rational(1, spec.n + 2) ||
      eps * eps >= Rational(2) * spec.budget / Rational(spec.n)) {
    fail(ErrorCode::kInvalidEpsilon, "eps = " + eps.str() + " is outside the admissible range");
  }
}

HardnessSpec withDefaultEps(HardnessSpec spec) {
  if (spec.eps.isZero()) spec.eps = defaultHardnessEps(spec.n, spec.budget, spec.approximation);
  return spec;
}

OraclePtr makeHardnessOracle(const HardnessSpec& spec) {
  validateHardnessSpec(spec);
  return std::make_shared<HardnessOracle>(spec, true);
}

OraclePtr makeHardnessBaseOracle(const HardnessSpec& spec) {
  validateHardnessSpec(spec);
  return std::make_shared<HardnessOracle>(spec, false);
}

Instance buildHardness(const HardnessSpec& spec) {
  OraclePtr oracle = makeHardnessOracle(spec);
  const int n = spec.n;
  const Rational& eps = spec.eps;
  std::vector<Action> actions;
  for (ActionId a = 0; a < n; ++a) actions.push_back(Action{a, a, eps * eps * eps});
  actions.push_back(Action{hardnessBadAction(n), hardnessPairAgent(n),
                           Rational(3, 2) * eps * spec.budget});
  actions.push_back(Action{hardnessGoodAction(n), hardnessPairAgent(n),
                           Rational(1, 2) * (spec.budget - Rational(n / 2) * eps * eps)});
  return Instance(n + 1, std::move(actions), std::move(oracle));
}

ActionSet hardnessDemand(const RewardOracle& hardnessOracle, const PriceVector& prices) {
  const auto* oracle = dynamic_cast<const HardnessOracle*>(&hardnessOracle);
  if (oracle == nullptr) fail(ErrorCode::kInvalidArgument, "not a hidden-set oracle");
  if (static_cast<int>(prices.price.size()) != oracle->groundSize()) {
    fail(ErrorCode::kInvalidArgument, "price vector has the wrong length");
  }
  if (auto s = oracle->simulate(prices)) return *s;
  return bruteForceDemand(*oracle, prices);
}

std::pair<Contract, ActionProfile> goodContract(const HardnessSpec& spec) {
  validateHardnessSpec(spec);
  const int n = spec.n;
  Contract alpha = Contract::zero(n + 1);
  ActionProfile s{hardnessGoodAction(n)};
  for (AgentId i : spec.hidden) {
    alpha.alpha[i] = spec.eps * spec.eps;
    s.insert(i);
  }
  alpha.alpha[hardnessPairAgent(n)] = spec.budget - Rational(n / 2) * spec.eps * spec.eps;
  return {std::move(alpha), s};
}

GapReport verifyGapExhaustive(const HardnessSpec& spec) {
  if (spec.n > 10) fail(ErrorCode::kGroundSetTooLarge, "gap verification needs n <= 10");
  const Instance inst = buildHardness(spec);
  const ValueTable table = tabulate(inst.oracle());
  const ActionProfile good = goodContract(spec).second;
  GapReport report;
  report.bound = Rational(spec.n / 2 + 2) * spec.eps;
  report.gapRatio = (Rational(1) - spec.budget) / Rational(2) / report.bound;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    const ActionProfile s = ActionProfile::fromMask(mask);
    ++report.profiles;
    if (s == good) continue;
    const std::optional<Contract> alpha = minIncentivizingContract(inst, s, table);
    if (!alpha || !alpha->budgetFeasible(spec.budget)) continue;
    ++report.feasibleProfiles;
    const Rational& f = table[mask];
    if (report.maxOtherValue < f || report.feasibleProfiles == 1) {
      report.maxOtherValue = f;
      report.maxOtherProfile = s;
    }
    if (f > report.bound && report.holds) {
      report.holds = false;
      report.violation = s;
    }
  }
  return report;
}

bool indistinguishabilityCheck(const HardnessSpec& spec, const std::vector<ActionSet>& queries) {
  const OraclePtr hidden = makeHardnessOracle(spec);
  const OraclePtr base = makeHardnessBaseOracle(spec);
  for (ActionSet s : queries) {
    if (hidden->value(s) != base->value(s)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::uint64_t uniformBelow(Rng& rng, std::uint64_t bound) {
  if (bound == 0) fail(ErrorCode::kInvalidArgument, "uniformBelow needs a positive bound");
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
  while (true) {
    const std::uint64_t draw = rng();
    if (draw <= limit) return draw % bound;
  }
}

std::vector<int> randomSubset(Rng& rng, int n, int k) {
  if (k < 0 || k > n) fail(ErrorCode::kInvalidArgument, "subset size out of range");
  std::vector<int> items(static_cast<std::size_t>(n));
  std::iota(items.begin(), items.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(uniformBelow(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(items[i], items[j]);
  }
  items.resize(static_cast<std::size_t>(k));
  std::sort(items.begin(), items.end());
  return items;
}

QueryView::QueryView(const Instance& inst, std::uint64_t queryBudget,
                     std::optional<std::vector<AgentId>> leak)
    : inst_(inst), budget_(queryBudget), leak_(std::move(leak)) {}

void QueryView::charge(std::uint64_t before) {
  value_queries_ += inst_.oracle().counts().value - before;
  if (value_queries_ > budget_) {
    fail(ErrorCode::kQueryBudgetExceeded,
         "query budget of " + std::to_string(budget_) + " value queries exceeded");
  }
}

Rational QueryView::value(ActionSet s) {
  const std::uint64_t before = inst_.oracle().counts().value;
  Rational out = inst_.oracle().value(s);
  charge(before);
  return out;
}

ActionSet QueryView::demand(const PriceVector& prices) {
  const std::uint64_t before = inst_.oracle().counts().value;
  ++demand_queries_;
  ActionSet out = inst_.oracle().demand(prices);
  charge(before);
  return out;
}

namespace {

std::pair<Contract, ActionProfile> offerGood(const HardnessSpec& params,
                                             std::vector<AgentId> guess) {
  HardnessSpec spec = params;
  spec.hidden = std::move(guess);
  return goodContract(spec);
}

}  // namespace

HardnessSolver randomGuessSolver() {
  return HardnessSolver{"random-guess",
                        [](QueryView&, const HardnessSpec& params, Rng& rng) {
                          return offerGood(params, randomSubset(rng, params.n, params.n / 2));
                        },
                        false};
}

HardnessSolver querySearchSolver() {
  return HardnessSolver{
      "query-search",
      [](QueryView& view, const HardnessSpec& params, Rng& rng) {
        const int n = params.n;
        // All n/2-subsets, shuffled.
        std::vector<std::vector<AgentId>> candidates;
        forEachSubset(AgentSet::range(n), [&](AgentSet s) {
          if (s.size() == n / 2) candidates.push_back(s.toVector());
        });
        for (std::size_t i = candidates.size(); i > 1; --i) {
          std::swap(candidates[i - 1], candidates[uniformBelow(rng, i)]);
        }
        // Without the hidden set, f(X + B) = eps * (n/2 + 2).
        const Rational plain = params.eps * Rational(n / 2 + 2);
        std::size_t next = 0;
        try {
          for (; next < candidates.size(); ++next) {
            ActionSet query{hardnessBadAction(n)};
            for (AgentId i : candidates[next]) query.insert(i);
            if (view.value(query) != plain) return offerGood(params, candidates[next]);
          }
        } catch (const ContractError& e) {
          if (e.code() != ErrorCode::kQueryBudgetExceeded) throw;
        }
        // Out of budget: guess among the candidates not yet ruled out.
        if (next >= candidates.size()) next = 0;
        const std::size_t pick = next + uniformBelow(rng, candidates.size() - next);
        return offerGood(params, candidates[pick]);
      },
      false};
}

HardnessSolver cheatingSolver() {
  return HardnessSolver{"cheating",
                        [](QueryView& view, const HardnessSpec& params, Rng&) {
                          return offerGood(params, view.leakedHidden().value());
                        },
                        true};
}

ExperimentReport adversaryExperiment(const HardnessSolver& solver, const HardnessSpec& params,
                                     int trials, std::uint64_t queryBudget, std::uint64_t seed) {
  if (trials < 0) fail(ErrorCode::kInvalidArgument, "trials must be non-negative");
  HardnessSpec public_params = withDefaultEps(params);
  // Validate the public parameters with a placeholder hidden set.
  public_params.hidden.clear();
  for (AgentId i = 0; i < public_params.n / 2; ++i) public_params.hidden.push_back(i);
  validateHardnessSpec(public_params);
  public_params.hidden.clear();

  ExperimentReport report;
  report.solver = solver.name;
  report.n = public_params.n;
  report.budget = public_params.budget;
  report.approximation = public_params.approximation;
  report.eps = public_params.eps;
  report.trials = trials;
  report.queryBudget = queryBudget;
  report.baselineProb = Rational(1) / binomial(public_params.n, public_params.n / 2);

  Rng rng(seed);
  Rational ratio_sum;
  for (int t = 0; t < trials; ++t) {
    HardnessSpec secret = public_params;
    secret.hidden = randomSubset(rng, public_params.n, public_params.n / 2);
    Rng solver_rng(rng());
    const Instance inst = buildHardness(secret);
    const auto [good_alpha, good_profile] = goodContract(secret);
    const Rational good_profit =
        (Rational(1) - good_alpha.total()) * inst.oracle().value(good_profile);

    ExperimentTrial row;
    row.trial = t;
    row.hidden = secret.hidden;
    QueryView view(inst, queryBudget,
                   solver.seesHiddenSet ? std::optional(secret.hidden) : std::nullopt);
    try {
      const auto [alpha, profile] = solver.run(view, public_params, solver_rng);
      const bool shaped = static_cast<int>(alpha.alpha.size()) == inst.numAgents() &&
                          profile.subsetOf(inst.groundSet()) &&
                          std::all_of(alpha.alpha.begin(), alpha.alpha.end(),
                                      [](const Rational& a) { return a.sign() >= 0; });
      if (shaped && alpha.budgetFeasible(secret.budget) && isNash(inst, alpha, profile)) {
        const Rational profit = (Rational(1) - alpha.total()) * inst.oracle().value(profile);
        row.approxRatio = profit / good_profit;
        row.success = secret.approximation * profit >= good_profit;
      }
    } catch (const ContractError& e) {
      if (e.code() != ErrorCode::kQueryBudgetExceeded) throw;
      row.budgetExceeded = true;
    }
    row.valueQueries = view.valueQueries();
    row.demandQueries = view.demandQueries();
    if (row.success) ++report.successes;
    ratio_sum += row.approxRatio;
    report.rows.push_back(std::move(row));
  }
  if (trials > 0) report.meanApproxRatio = ratio_sum / Rational(trials);
  return report;
}

}  // namespace combcontract
