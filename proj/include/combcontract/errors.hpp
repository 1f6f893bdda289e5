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

#ifndef COMBCONTRACT_ERRORS_HPP_
#define COMBCONTRACT_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace combcontract {

enum class ErrorCode {
  kInvalidArgument,
  kDuplicateActionId,
  kNegativeCost,
  kOracleRangeViolation,
  kNonzeroEmptyValue,
  kUnknownActionId,
  kUnknownAgentId,
  kElementAlreadyPresent,
  kGroundSetTooLarge,
  kNotAnEquilibrium,
  kInvalidEpsilon,
  kOddN,
  kBadHiddenSetSize,
  kQueryBudgetExceeded,
  kSchemaError,
  kRationalParse,
  kSolverMismatch,
  kInvalidObjective,
  kIo,
  kInternal,
};

std::string_view errorCodeName(ErrorCode code);

// The single exception type thrown by the library. The C API maps `code()`
// onto its status enum; everything else just reads `what()`.
class ContractError : public std::runtime_error {
 public:
  ContractError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw ContractError(code, message);
}

}  // namespace combcontract

#endif  // COMBCONTRACT_ERRORS_HPP_
