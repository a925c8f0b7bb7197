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

#include "icbd/errors.h"

#include <string>

namespace icbd {

const char* ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCycleInTree: return "CycleInTree";
    case ErrorCode::kInfoSetActionMismatch: return "InfoSetActionMismatch";
    case ErrorCode::kPerfectRecallViolation: return "PerfectRecallViolation";
    case ErrorCode::kDanglingHistory: return "DanglingHistory";
    case ErrorCode::kPreferenceDomainMismatch: return "PreferenceDomainMismatch";
    case ErrorCode::kSameHistory: return "SameHistory";
    case ErrorCode::kIncompleteProfile: return "IncompleteProfile";
    case ErrorCode::kStrategyNotInRestriction: return "StrategyNotInRestriction";
    case ErrorCode::kEmptyProblem: return "EmptyProblem";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kUnknownConditioningEvent: return "UnknownConditioningEvent";
    case ErrorCode::kInvalidCps: return "InvalidCPS";
    case ErrorCode::kLpDegenerate: return "LpDegenerate";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kWitnessSearchExhausted: return "WitnessSearchExhausted";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kNotPerfectInformation: return "NotPerfectInformation";
    case ErrorCode::kEvenVoterCount: return "EvenVoterCount";
    case ErrorCode::kIndifferenceFound: return "IndifferenceFound";
    case ErrorCode::kInvalidAgenda: return "InvalidAgenda";
    case ErrorCode::kEpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

IcbdError::IcbdError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorName(code)) + ": " + message),
      code_(code) {}

void Fail(ErrorCode code, const std::string& message) {
  throw IcbdError(code, message);
}

}  // namespace icbd
