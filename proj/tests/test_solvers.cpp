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

#include <gtest/gtest.h>

#include "combcontract/equilibria.hpp"
#include "combcontract/errors.hpp"
#include "combcontract/hardness.hpp"
#include "combcontract/objectives.hpp"
#include "combcontract/solvers.hpp"
#include "support.hpp"

using namespace combcontract;

namespace {

using Phi = std::function<Rational(const Rational&, const Rational&, const Rational&)>;

Phi refPhi(const Objective& o) {
  switch (o.kind()) {
    case Objective::Kind::kProfit: return cctest::refProfit;
    case Objective::Kind::kReward: return cctest::refReward;
    case Objective::Kind::kWelfare: return cctest::refWelfare;
    default: return [o](const Rational& t, const Rational& f, const Rational& c) { return o.value(t, f, c); };
  }
}

Instance single(Rational c, Rational f) {
  return Instance(1, {{0, 0, std::move(c)}}, makeAdditive({std::move(f)}));
}

// Output contract/profile is an equilibrium within budget and its value is reported truthfully.
void expectSound(const Instance& inst, const SolveResult& r, const Rational& budget, const Objective& obj) {
  ASSERT_TRUE(r.contract.budgetFeasible(budget)) << r.solver;
  ASSERT_TRUE(cctest::refIsNash(inst, cctest::valueTable(inst), r.contract, r.profile.mask())) << r.solver;
  ASSERT_EQ(evaluate(obj, inst, r.contract, r.profile), r.value) << r.solver;
}

const Objective kObjectives[] = {Objective::profit(), Objective::reward(), Objective::welfare()};

}  // namespace

TEST(Brute, Examples) {
  auto f = makeAdditive({Rational(1, 4), Rational(1, 4)});
  Instance costly(2, {{0, 0, Rational(1)}, {1, 1, Rational(2)}}, f);
  const SolveResult none = bruteForceOpt(costly, Rational(1, 2), Objective::profit());
  EXPECT_EQ(none.value, Rational(0));
  EXPECT_EQ(none.profile, ActionSet{});
  EXPECT_EQ(none.contract, Contract::zero(2));

  const SolveResult one = bruteForceOpt(single(Rational(1, 4), Rational(1, 2)), Rational(1), Objective::profit());
  EXPECT_EQ(one.contract.alpha[0], Rational(1, 2));
  EXPECT_EQ(one.profile, ActionSet{0});
  EXPECT_EQ(one.value, Rational(1, 4));
  EXPECT_FALSE(one.certifiedFactor);

  const HardnessSpec spec{4, Rational(1, 2), Rational(1), Rational(1, 100), {0, 1}};
  const SolveResult h = bruteForceOpt(buildHardness(spec), spec.budget, Objective::profit());
  EXPECT_GE(h.value, Rational(1, 4));
  EXPECT_EQ(h.profile, (ActionSet{0, 1, hardnessGoodAction(4)}));

  try {
    bruteForceOpt(costly, Rational(1), Objective::profit(), BruteOptions{1});
    ADD_FAILURE();
  } catch (const ContractError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGroundSetTooLarge);
  }
}

TEST(Brute, MatchesReference) {
  cctest::Rng rng(1);
  const Objective mix = Objective::combo({Rational(1, 2), Rational(1, 2)}, {Objective::profit(), Objective::reward()});
  for (int t = 0; t < 60; ++t) {
    Instance inst = t % 4 == 3 ? cctest::randomCoverage(rng, 3, 6) : cctest::randomGs(rng, t, 3, 7);
    const auto f = cctest::valueTable(inst);
    const Rational budget = cctest::randomRational(rng, 0, 8, 8);
    for (const Objective& o : {Objective::profit(), Objective::reward(), Objective::welfare(), mix}) {
      const SolveResult r = bruteForceOpt(inst, budget, o);
      ASSERT_EQ(r.value, cctest::refOptimum(inst, f, budget, refPhi(o)).value) << o.name();
      expectSound(inst, r, budget, o);
    }
  }
}

TEST(Dp, HandExample) {
  auto f = makeAdditive({Rational(1, 2), Rational(1, 2)});
  Instance inst(1, {{0, 0, Rational(1, 8)}, {1, 0, Rational(1, 4)}}, f);
  const DpTable t = buildDpTable(inst, DpValue::kReward, Rational(1, 2), Rational(1, 2));
  EXPECT_EQ(t.step, Rational(1, 8));
  ASSERT_EQ(t.columns, 9);
  // Prefixes: {} at 0 units, {0} at 4 units paying 1/4, {0,1} at 8 units paying 1/2.
  EXPECT_EQ(*t.payment[0][0], Rational(0));
  for (int x = 1; x < 9; ++x) EXPECT_FALSE(t.payment[0][x]);
  EXPECT_EQ(*t.final(0), Rational(0));
  for (int x = 1; x <= 4; ++x) EXPECT_EQ(*t.final(x), Rational(1, 4)) << x;
  for (int x = 5; x <= 8; ++x) EXPECT_EQ(*t.final(x), Rational(1, 2)) << x;
  EXPECT_EQ(t.reconstruct(4).second, ActionSet{0});
  EXPECT_EQ(t.reconstruct(8).second, (ActionSet{0, 1}));
  EXPECT_EQ(t.reconstruct(8).first.alpha[0], Rational(1, 2));

  Instance one = single(Rational(1, 4), Rational(1, 2));
  const DpTable z = buildDpTable(one, DpValue::kReward, Rational(1, 2), Rational(1, 10));
  EXPECT_EQ(*z.final(0), Rational(0));
}

TEST(Dp, MonotoneAndReconstructs) {
  cctest::Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    Instance inst = cctest::randomAdditive(rng, 4, 8);
    const Rational eps = cctest::randomRational(rng, 1, 5, 10);
    for (DpValue phi : {DpValue::kReward, DpValue::kWelfare}) {
      Rational b;
      for (ActionId a = 0; a < inst.numActions(); ++a) {
        const Rational fa = inst.oracle().value(ActionSet{a});
        b = max(b, phi == DpValue::kReward ? fa : fa - inst.cost(a));
      }
      if (b.sign() <= 0) continue;
      const DpTable d = buildDpTable(inst, phi, b, eps, Rational(1));
      ASSERT_LE(d.columns, (Rational(inst.numActions()) / (eps / Rational(inst.numActions()))).ceil() + 1);
      for (int x = 0; x + 1 < d.columns; ++x) {
        if (!d.final(x + 1)) continue;
        ASSERT_TRUE(d.final(x));
        ASSERT_LE(*d.final(x), *d.final(x + 1));
      }
      for (int x = 0; x < d.columns; ++x) {
        if (!d.final(x)) continue;
        const auto [alpha, s] = d.reconstruct(x);
        ASSERT_EQ(alpha.total(), *d.final(x));
        // The discretized value of the reconstruction covers x.
        mpz_class units = 0;
        for (ActionId a : s) {
          const Rational fa = inst.oracle().value(ActionSet{a});
          units += ((phi == DpValue::kReward ? fa : fa - inst.cost(a)) / d.step).floor();
        }
        ASSERT_GE(units, x);
        ASSERT_TRUE(isNash(inst, alpha, s));
      }
    }
  }
}

TEST(AdditiveFptas, Examples) {
  auto f = makeAdditive({Rational(1, 4), Rational(1, 4)});
  Instance inst(2, {{0, 0, Rational(1, 20)}, {1, 1, Rational(1, 10)}}, f);
  const SolveResult zero = additiveFptas(inst, Rational(0), Rational(1, 10), Objective::profit());
  EXPECT_EQ(zero.value, Rational(0));
  EXPECT_EQ(zero.profile, ActionSet{});
  EXPECT_EQ(*zero.certifiedFactor, Rational(10, 9));

  auto g = makeAdditive({Rational(1, 5), Rational(1, 7), Rational(1, 3), Rational(1, 6)});
  Instance two(2, {{0, 0, Rational(1, 20)}, {1, 0, Rational(1, 14)}, {2, 1, Rational(1, 9)}, {3, 1, Rational(1, 12)}}, g);
  for (const Objective& o : kObjectives) {
    const SolveResult r = additiveFptas(two, Rational(1), Rational(1, 10), o);
    const SolveResult opt = bruteForceOpt(two, Rational(1), o);
    EXPECT_GE(r.value, Rational(9, 10) * opt.value) << o.name();
    expectSound(two, r, Rational(1), o);
  }
  try {
    additiveFptas(cctest::withOwners(1, {0}, {Rational(0)}, makeUnitDemand({Rational(1, 2)})), Rational(1),
                  Rational(1, 10), Objective::profit());
    ADD_FAILURE();
  } catch (const ContractError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSolverMismatch);
  }
}

TEST(AdditiveFptas, WithinFactorOfBrute) {
  cctest::Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    Instance inst = cctest::randomAdditive(rng, 3, 8);
    const auto f = cctest::valueTable(inst);
    const Rational budget = cctest::randomRational(rng, 0, 8, 8);
    for (const Rational& eps : {Rational(1, 4), Rational(1, 10)}) {
      for (const Objective& o : kObjectives) {
        const SolveResult r = additiveFptas(inst, budget, eps, o);
        const Rational opt = cctest::refOptimum(inst, f, budget, refPhi(o)).value;
        ASSERT_GE(r.value, (Rational(1) - eps) * opt) << o.name();
        expectSound(inst, r, budget, o);
      }
    }
  }
}

TEST(SingleAgentFptas, Examples) {
  EXPECT_EQ(singleAgentGridSize(1, Rational(1, 2)), 1);  // (1/2)^1 <= 1/2
  EXPECT_EQ(singleAgentGridSize(2, Rational(1, 2)), 3);  // 1/8 <= 1/8
  const SolveResult r = singleAgentFptas(single(Rational(1, 4), Rational(1, 2)), Rational(1), Rational(1, 10));
  EXPECT_GE(r.value, Rational(9, 10) * Rational(1, 4));
  EXPECT_LE(r.value, Rational(1, 4));

  Instance worthless(1, {{0, 0, Rational(1, 4)}, {1, 0, Rational(1, 3)}}, makeAdditive({Rational(0), Rational(0)}));
  const SolveResult w = singleAgentFptas(worthless, Rational(1), Rational(1, 10));
  EXPECT_EQ(w.value, Rational(0));
  EXPECT_EQ(w.profile, ActionSet{});

  Instance free(1, {{0, 0, Rational(0)}, {1, 0, Rational(0)}}, makeAdditive({Rational(1, 4), Rational(1, 3)}));
  const SolveResult fr = singleAgentFptas(free, Rational(1, 2), Rational(1, 10));
  EXPECT_EQ(fr.contract.alpha[0], Rational(0));
  EXPECT_EQ(fr.profile, (ActionSet{0, 1}));

  try {
    singleAgentFptas(Instance(2, {{0, 0, 0}, {1, 1, 0}}, makeAdditive({Rational(0), Rational(0)})),
                     Rational(1), Rational(1, 10));
    ADD_FAILURE();
  } catch (const ContractError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSolverMismatch);
  }
}

TEST(SingleAgentFptas, WithinFactorAndBracket) {
  cctest::Rng rng(5);
  int bracketed = 0;
  for (int t = 0; t < 40; ++t) {
    const int m = static_cast<int>(cctest::uniformInt(rng, 1, 6));
    const auto table = cctest::randomMonotoneTable(rng, m);
    std::vector<Rational> singles;
    for (int a = 0; a < m; ++a) singles.push_back(table[std::size_t{1} << a]);
    Instance inst = cctest::withOwners(1, std::vector<int>(m, 0), cctest::costsNear(rng, singles), makeExplicit(m, table));
    const auto f = cctest::valueTable(inst);
    const Rational budget = cctest::randomRational(rng, 1, 8, 8);
    for (const Rational& eps : {Rational(1, 4), Rational(1, 10)}) {
      const SolveResult r = singleAgentFptas(inst, budget, eps);
      const cctest::RefOpt opt = cctest::refOptimum(inst, f, budget, cctest::refProfit);
      ASSERT_GE(r.value, (Rational(1) - eps) * opt.value);
      expectSound(inst, r, budget, Objective::profit());
    }
    // Bracket around the optimal share.
    const cctest::RefOpt opt = cctest::refOptimum(inst, f, budget, cctest::refProfit);
    // S-dagger maximizes B f - c, preferring larger f on ties; SW is its welfare.
    Rational sw;
    Rational bestU;
    Rational bestF;
    for (std::uint64_t s = 0; s < f.size(); ++s) {
      const Rational u = budget * f[s] - cctest::costOf(inst, s);
      if (s == 0 || bestU < u || (bestU == u && bestF < f[s])) {
        bestF = f[s];
        bestU = u;
        sw = f[s] - cctest::costOf(inst, s);
      }
    }
    if (opt.profile == 0 || opt.value.isZero()) continue;
    Rational cj;
    for (int a = 0; a < m; ++a) {
      if ((opt.profile >> a) & 1U) cj = max(cj, inst.cost(a));
    }
    if (cj.isZero()) continue;
    const Rational lo = Rational(1) - sw / (cj + sw);
    const Rational hi = min(budget, Rational(1) - sw / (Rational(static_cast<long>(m) << m) * (cj + sw)));
    ASSERT_LE(lo, opt.alpha.alpha[0]);
    ASSERT_LE(opt.alpha.alpha[0], hi);
    ++bracketed;
  }
  EXPECT_GT(bracketed, 0);
}

TEST(SingleAgent, RewardIncreasesWithShare) {
  cctest::Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const int m = static_cast<int>(cctest::uniformInt(rng, 1, 6));
    const auto table = cctest::randomMonotoneTable(rng, m);
    std::vector<Rational> singles;
    for (int a = 0; a < m; ++a) singles.push_back(table[std::size_t{1} << a]);
    Instance inst = cctest::withOwners(1, std::vector<int>(m, 0), cctest::costsNear(rng, singles), makeExplicit(m, table));
    // Breakpoints: the least share for every set, plus a grid.
    std::vector<Rational> shares;
    for (std::uint64_t s = 0; s < table.size(); ++s) {
      if (auto a = minIncentivizingContract(inst, ActionSet::fromMask(s))) shares.push_back(a->alpha[0]);
    }
    for (int k = 0; k <= 32; ++k) shares.emplace_back(k, 32);
    std::sort(shares.begin(), shares.end());
    Rational prev;
    for (const Rational& a : shares) {
      const Rational now = inst.oracle().value(bestResponse(inst, 0, a, ActionSet{}));
      ASSERT_LE(prev, now);
      prev = now;
    }
  }
}

TEST(Downsize, Examples) {
  cctest::Rng rng(7);
  Instance inst = cctest::withPositiveCosts(cctest::randomOxs(rng, 3, 7));
  const DownsizeResult empty = downsize(inst, 3, Contract::zero(inst.numAgents()), ActionSet{});
  EXPECT_GE(empty.rewardAfter, Rational(0));

  auto code = [&](const std::function<void()>& f) {
    try {
      f();
    } catch (const ContractError& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  EXPECT_EQ(code([&] { downsize(inst, 2, Contract::zero(inst.numAgents()), ActionSet{}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code([&] { downsize(inst, 3, Contract::zero(inst.numAgents()), inst.groundSet()); }),
            ErrorCode::kNotAnEquilibrium);
}

TEST(Downsize, Guarantees) {
  cctest::Rng rng(8);
  int single = 0;
  int grouped = 0;
  for (int t = 0; t < 60; ++t) {
    Instance inst = cctest::withPositiveCosts(cctest::randomGs(rng, t, 4, 8));
    const auto f = cctest::valueTable(inst);
    for (int trial = 0; trial < 4; ++trial) {
      Contract alpha = Contract::zero(inst.numAgents());
      for (auto& a : alpha.alpha) a = cctest::randomRational(rng, 0, 6, 24);
      const ActionSet s = neFromDemand(inst, alpha);
      for (int m : {3, 6, 14}) {
        const DownsizeResult d = downsize(inst, m, alpha, s);
        ASSERT_TRUE(cctest::refIsNash(inst, f, d.contract, d.profile.mask()));
        ASSERT_EQ(d.rewardBefore, f[s.mask()]);
        ASSERT_EQ(d.rewardAfter, f[d.profile.mask()]);
        ASSERT_LE(f[s.mask()], Rational(2 * m - 2) * f[d.profile.mask()]);
        ASSERT_TRUE(d.rewardGuarantee);
        if (d.singleAgent) {
          ++single;
          const AgentId i = *d.singleAgent;
          ASSERT_EQ(d.contract, restrictContract(alpha, AgentSet{i}));
          ASSERT_TRUE((s & inst.agentActions(i)).subsetOf(d.profile));
        } else {
          ++grouped;
          ASSERT_LE(Rational(m) * d.contract.total(), Rational(5) * alpha.total());
        }
        ASSERT_TRUE(d.paymentGuarantee);
      }
    }
  }
  EXPECT_GT(single, 0);
  EXPECT_GT(grouped, 0);
}

TEST(SingleAgentExact, Examples) {
  Instance idle(2, {{0, 0, Rational(1, 8)}}, makeAdditive({Rational(1, 2)}));
  const SolveResult none = gsSingleAgentExact(idle, 1, Objective::profit(), Rational(1));
  EXPECT_EQ(none.profile, ActionSet{});
  EXPECT_EQ(none.contract, Contract::zero(2));

  const SolveResult tight = gsSingleAgentExact(single(Rational(1, 4), Rational(1, 2)), 0, Objective::profit(), Rational(1, 3));
  EXPECT_EQ(tight.profile, ActionSet{});
  EXPECT_EQ(tight.value, Rational(0));

  cctest::Rng rng(9);
  for (int t = 0; t < 40; ++t) {
    Instance inst = cctest::randomGs(rng, t, 3, 9);
    const auto f = cctest::valueTable(inst);
    const Rational budget = cctest::randomRational(rng, 1, 8, 8);
    for (AgentId i = 0; i < inst.numAgents(); ++i) {
      for (const Objective& o : kObjectives) {
        const SolveResult r = gsSingleAgentExact(inst, i, o, budget);
        ASSERT_EQ(r.value, cctest::refOptimum(inst, f, budget, refPhi(o), std::nullopt, i).value);
        ASSERT_TRUE(r.profile.subsetOf(inst.agentActions(i)));
        for (AgentId k = 0; k < inst.numAgents(); ++k) {
          if (k != i) ASSERT_TRUE(r.contract.alpha[k].isZero());
        }
        expectSound(inst, r, budget, o);
      }
    }
  }
}

TEST(MaxRewardBounded, Examples) {
  cctest::Rng rng(10);
  Instance inst = cctest::randomOxs(rng, 3, 6);
  EXPECT_EQ(maxRewardBoundedBrute(inst, Rational(0)).value, Rational(0));

  // The big action needs alpha = 1/2 > 3B/4 at B = 1/2; the small one needs 1/4.
  auto f = makeAdditive({Rational(1, 2), Rational(1, 10)});
  Instance two(2, {{0, 0, Rational(1, 4)}, {1, 1, Rational(1, 40)}}, f);
  EXPECT_EQ(bruteForceOpt(two, Rational(1, 2), Objective::reward()).value, Rational(1, 2));
  const SolveResult capped = maxRewardBoundedBrute(two, Rational(1, 2));
  EXPECT_EQ(capped.value, Rational(1, 10));
  EXPECT_EQ(capped.profile, ActionSet{1});

  const HardnessSpec spec{4, Rational(1, 2), Rational(1), Rational(1, 100), {0, 1}};
  EXPECT_LE(maxRewardBoundedBrute(buildHardness(spec), spec.budget).value, Rational(4) * spec.eps);

  for (int t = 0; t < 30; ++t) {
    Instance g = cctest::randomGs(rng, t, 3, 7);
    const Rational budget = cctest::randomRational(rng, 0, 8, 8);
    const SolveResult r = maxRewardBoundedBrute(g, budget);
    ASSERT_EQ(r.value, cctest::refOptimum(g, cctest::valueTable(g), budget, cctest::refReward,
                                          Rational(3, 4) * budget).value);
    for (const Rational& a : r.contract.alpha) ASSERT_LE(a, Rational(3, 4) * budget);
  }
}

TEST(ScaleCosts, Examples) {
  Instance inst = single(Rational(1, 4), Rational(1, 2));
  EXPECT_EQ(scaleCosts(inst, Rational(1)).cost(0), Rational(1, 4));
  EXPECT_EQ(scaleCosts(inst, Rational(2)).cost(0), Rational(1, 2));
  const Rational factor = Rational(4, 3) * (Rational(1) / Rational(1, 2));
  EXPECT_EQ(factor, Rational(8, 3));
  EXPECT_EQ(scaleCosts(inst, factor).cost(0), Rational(2, 3));
}

TEST(Pipeline, WithinCertifiedFactor) {
  cctest::Rng rng(11);
  for (int t = 0; t < 40; ++t) {
    Instance inst = cctest::withPositiveCosts(cctest::randomGs(rng, t, 3, 7));
    const auto f = cctest::valueTable(inst);
    for (const Rational& budget : {Rational(1, 4), Rational(1)}) {
      for (const Objective& o : {Objective::profit(), Objective::reward()}) {
        const SolveResult r = gsConstantFactor(inst, budget, o);
        EXPECT_EQ(*r.certifiedFactor, kGsPipelineFactor);
        const Rational opt = cctest::refOptimum(inst, f, budget, refPhi(o)).value;
        ASSERT_LE(opt, kGsPipelineFactor * r.value);
        expectSound(inst, r, budget, o);
      }
    }
  }
}

TEST(Pipeline, SingleAgentCarriesReward) {
  // Agent 1 owns only a worthless action.
  auto f = makeAdditive({Rational(1, 4), Rational(1, 4), Rational(0)});
  Instance inst(2, {{0, 0, Rational(1, 40)}, {1, 0, Rational(1, 20)}, {2, 1, Rational(1, 100)}}, f);
  const SolveResult r = gsConstantFactor(inst, Rational(1, 2), Objective::profit());
  const SolveResult s = gsSingleAgentExact(inst, 0, Objective::profit(), Rational(1, 2));
  EXPECT_EQ(r.value, s.value);
  EXPECT_EQ(r.value, bruteForceOpt(inst, Rational(1, 2), Objective::profit()).value);
}

TEST(Pipeline, DecompositionBound) {
  cctest::Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    Instance inst = cctest::randomGs(rng, t, 3, 7);
    const auto f = cctest::valueTable(inst);
    const Rational budget = cctest::randomRational(rng, 1, 8, 8);
    const Rational mrb = cctest::refOptimum(inst, f, budget, cctest::refReward, Rational(3, 4) * budget).value;
    for (const Objective& o : {Objective::profit(), Objective::reward()}) {
      Rational bestSingle;
      for (int i = 0; i < inst.numAgents(); ++i) {
        bestSingle = max(bestSingle, cctest::refOptimum(inst, f, budget, refPhi(o), std::nullopt, i).value);
      }
      ASSERT_LE(cctest::refOptimum(inst, f, budget, refPhi(o)).value, Rational(2) * mrb + bestSingle);
    }
  }
}
