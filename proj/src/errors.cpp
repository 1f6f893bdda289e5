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

#include "combcontract/errors.hpp"

namespace combcontract {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDuplicateActionId: return "DuplicateActionId";
    case ErrorCode::kNegativeCost: return "NegativeCost";
    case ErrorCode::kOracleRangeViolation: return "OracleRangeViolation";
    case ErrorCode::kNonzeroEmptyValue: return "NonzeroEmptyValue";
    case ErrorCode::kUnknownActionId: return "UnknownActionId";
    case ErrorCode::kUnknownAgentId: return "UnknownAgentId";
    case ErrorCode::kElementAlreadyPresent: return "ElementAlreadyPresent";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kNotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kOddN: return "OddN";
    case ErrorCode::kBadHiddenSetSize: return "BadHiddenSetSize";
    case ErrorCode::kQueryBudgetExceeded: return "QueryBudgetExceeded";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kRationalParse: return "RationalParseError";
    case ErrorCode::kSolverMismatch: return "SolverMismatch";
    case ErrorCode::kInvalidObjective: return "InvalidObjective";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace combcontract
