// Copyright 2026 The ICBD Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICBD_ERRORS_H_
#define ICBD_ERRORS_H_

#include <stdexcept>
#include <string>

namespace icbd {

enum class ErrorCode {
  kCycleInTree,
  kInfoSetActionMismatch,
  kPerfectRecallViolation,
  kDanglingHistory,
  kPreferenceDomainMismatch,
  kSameHistory,
  kIncompleteProfile,
  kStrategyNotInRestriction,
  kEmptyProblem,
  kSizeCap,
  kPreconditionViolated,
  kUnknownConditioningEvent,
  kInvalidCps,
  kLpDegenerate,
  kHypothesisViolated,
  kWitnessSearchExhausted,
  kDomainMismatch,
  kNotPerfectInformation,
  kEvenVoterCount,
  kIndifferenceFound,
  kInvalidAgenda,
  kEpsilonTooLarge,
  kParseError,
  kSchemaError,
  kGenerationFailed,
};

const char* ErrorName(ErrorCode code);

class IcbdError : public std::runtime_error {
 public:
  IcbdError(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace icbd

#endif  // ICBD_ERRORS_H_
