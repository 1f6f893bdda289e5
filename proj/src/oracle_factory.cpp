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

#include <type_traits>

#include "combcontract/hardness.hpp"
#include "combcontract/rewards.hpp"

namespace combcontract {

OraclePtr makeOracle(const RewardSpec& spec) {
  return std::visit(
      [](const auto& s) -> OraclePtr {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, AdditiveSpec>) {
          return makeAdditive(s.weights);
        } else if constexpr (std::is_same_v<T, UnitDemandSpec>) {
          return makeUnitDemand(s.weights);
        } else if constexpr (std::is_same_v<T, UniformKDemandSpec>) {
          return makeUniformKDemand(s.groundSize, s.k, s.v);
        } else if constexpr (std::is_same_v<T, AssignmentSpec>) {
          return makeAssignment(s.values);
        } else if constexpr (std::is_same_v<T, CoverageSpec>) {
          return makeCoverage(s.elementWeights, s.sets);
        } else if constexpr (std::is_same_v<T, HardnessSpec>) {
          return makeHardnessOracle(withDefaultEps(s));
        } else {
          return makeExplicit(s.groundSize, s.table, s.declared);
        }
      },
      spec);
}

}  // namespace combcontract
