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

#include "combcontract/objectives.hpp"

#include <algorithm>
#include <string>

#include "combcontract/errors.hpp"

namespace combcontract {

Objective Objective::profit() { return Objective(Kind::kProfit); }
Objective Objective::reward() { return Objective(Kind::kReward); }
Objective Objective::welfare() { return Objective(Kind::kWelfare); }

Objective Objective::combo(std::vector<Rational> weights, std::vector<Objective> parts) {
  if (weights.empty() || weights.size() != parts.size()) {
    fail(ErrorCode::kInvalidObjective, "a combination needs one weight per objective");
  }
  Rational total;
  for (const Rational& w : weights) {
    if (w.sign() <= 0) fail(ErrorCode::kInvalidObjective, "combination weights must be positive");
    total += w;
  }
  if (total != Rational(1)) {
    fail(ErrorCode::kInvalidObjective, "combination weights sum to " + total.str() + ", not 1");
  }
  Objective out(Kind::kCombo);
  out.weights_ = std::move(weights);
  out.parts_ = std::move(parts);
  return out;
}

bool operator==(const Objective& a, const Objective& b) {
  return a.kind_ == b.kind_ && a.weights_ == b.weights_ && a.parts_ == b.parts_;
}

bool Objective::involvesWelfare() const {
  if (kind_ == Kind::kWelfare) return true;
  for (const Objective& part : parts_) {
    if (part.involvesWelfare()) return true;
  }
  return false;
}

std::string Objective::name() const {
  switch (kind_) {
    case Kind::kProfit: return "profit";
    case Kind::kReward: return "reward";
    case Kind::kWelfare: return "welfare";
    case Kind::kCombo: break;
  }
  std::string out = "combo(";
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j > 0) out += " + ";
    out += weights_[j].str() + " " + parts_[j].name();
  }
  return out + ")";
}

Rational Objective::value(const Rational& totalShare, const Rational& reward,
                          const Rational& cost) const {
  switch (kind_) {
    case Kind::kProfit: return (Rational(1) - totalShare) * reward;
    case Kind::kReward: return reward;
    case Kind::kWelfare: return reward - cost;
    case Kind::kCombo: break;
  }
  Rational out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    out += weights_[j] * parts_[j].value(totalShare, reward, cost);
  }
  return out;
}

Objective parseObjectiveName(const std::string& name) {
  if (name == "profit") return Objective::profit();
  if (name == "reward") return Objective::reward();
  if (name == "welfare") return Objective::welfare();
  fail(ErrorCode::kInvalidObjective, "unknown objective '" + name + "'");
}

Rational evaluate(const Objective& obj, const Instance& inst, const Contract& alpha,
                  ActionProfile s) {
  if (static_cast<int>(alpha.alpha.size()) != inst.numAgents()) {
    fail(ErrorCode::kInvalidArgument, "contract does not match the agent count");
  }
  return obj.value(alpha.total(), inst.oracle().value(s), cost(inst, s));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Contract> shareGrid(int n, int d, const Rational& maxTotal) {
  std::vector<Contract> out;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  while (true) {
    Contract c = Contract::zero(n);
    for (int i = 0; i < n; ++i) c.alpha[i] = Rational(k[i], d);
    if (c.total() <= maxTotal) out.push_back(std::move(c));
    int pos = 0;
    while (pos < n && k[pos] == d) k[pos++] = 0;
    if (pos == n) break;
    ++k[pos];
  }
  return out;
}

bool dominated(const Contract& a, const Contract& b) {
  for (std::size_t i = 0; i < a.alpha.size(); ++i) {
    if (b.alpha[i] < a.alpha[i]) return false;
  }
  return true;
}

}  // namespace

BestReport verifyBestProperties(const Objective& obj, const Instance& inst,
                                const BestOptions& options) {
  const int m = inst.numActions();
  const int n = inst.numAgents();
  if (m > options.maxActions) {
    fail(ErrorCode::kGroundSetTooLarge, "BEST verification supports at most " +
                                            std::to_string(options.maxActions) + " actions");
  }
  if (options.gridDenominator <= 0) {
    fail(ErrorCode::kInvalidArgument, "grid denominator must be positive");
  }
  const ValueTable f = tabulate(inst.oracle());
  const std::size_t profiles = f.size();
  std::vector<Rational> c(profiles);
  for (std::size_t s = 0; s < profiles; ++s) c[s] = cost(inst, ActionSet::fromMask(s));

  std::vector<Contract> contracts = shareGrid(n, options.gridDenominator, options.maxTotalShare);
  for (std::size_t s = 0; s < profiles; ++s) {
    auto least = minIncentivizingContract(inst, ActionSet::fromMask(s), f);
    if (least && least->total() <= options.maxTotalShare &&
        std::find(contracts.begin(), contracts.end(), *least) == contracts.end()) {
      contracts.push_back(std::move(*least));
    }
  }

  BestReport report;
  report.contracts = contracts.size();
  report.equilibriumDomain =
      options.domain == BestOptions::Domain::kEquilibria ||
      (options.domain == BestOptions::Domain::kAuto && obj.involvesWelfare());

  // in[k][s]: whether (contract k, profile s) is quantified over.
  std::vector<std::vector<bool>> in(contracts.size(), std::vector<bool>(profiles, true));
  std::vector<std::vector<Rational>> phi(contracts.size(), std::vector<Rational>(profiles));
  std::vector<Rational> totals(contracts.size());
  for (std::size_t k = 0; k < contracts.size(); ++k) {
    totals[k] = contracts[k].total();
    for (std::size_t s = 0; s < profiles; ++s) {
      if (report.equilibriumDomain) {
        in[k][s] = checkNash(inst, contracts[k], ActionSet::fromMask(s), f).nash;
      }
      phi[k][s] = obj.value(totals[k], f[s], c[s]);
    }
  }

  auto failWith = [&](const char* property, std::size_t k, std::size_t s) {
    report.pass = false;
    report.property = property;
    report.alpha = contracts[k];
    report.s = ActionSet::fromMask(s);
  };

  for (std::size_t k = 0; k < contracts.size() && report.pass; ++k) {
    for (std::size_t s = 0; s < profiles && report.pass; ++s) {
      if (!in[k][s]) continue;
      // (i) profit <= phi <= f.
      ++report.checks;
      const Rational profit = (Rational(1) - totals[k]) * f[s];
      if (phi[k][s] < profit || phi[k][s] > f[s]) {
        failWith("sandwich", k, s);
        break;
      }
      // (ii) phi(alpha, S) <= f(S_-i) + phi(alpha|_i, S_i).
      for (AgentId i = 0; i < n; ++i) {
        ++report.checks;
        const std::uint64_t own = s & inst.agentActions(i).mask();
        const Rational rhs = f[s & ~own] + obj.value(contracts[k].alpha[i], f[own], c[own]);
        if (phi[k][s] > rhs) {
          failWith("decomposable", k, s);
          report.agent = i;
          break;
        }
      }
      if (!report.pass) break;
      // (iii) phi(alpha, S) <= phi(alpha, S') for S ⊆ S'.
      forEachSubset(ActionSet::fromMask(s), [&](ActionSet sub) {
        if (!report.pass || !in[k][sub.mask()]) return;
        ++report.checks;
        if (phi[k][sub.mask()] > phi[k][s]) {
          failWith("increasing-in-S", k, sub.mask());
          report.s2 = ActionSet::fromMask(s);
        }
      });
    }
  }
  // (iv) phi(alpha, S) >= phi(alpha', S) for alpha <= alpha'.
  for (std::size_t k = 0; k < contracts.size() && report.pass; ++k) {
    for (std::size_t k2 = 0; k2 < contracts.size() && report.pass; ++k2) {
      if (k == k2 || !dominated(contracts[k], contracts[k2])) continue;
      for (std::size_t s = 0; s < profiles; ++s) {
        if (!in[k][s] || !in[k2][s]) continue;
        ++report.checks;
        if (phi[k][s] < phi[k2][s]) {
          failWith("decreasing-in-alpha", k, s);
          report.alpha2 = contracts[k2];
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace combcontract
