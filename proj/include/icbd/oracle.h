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

#ifndef ICBD_ORACLE_H_
#define ICBD_ORACLE_H_

#include <functional>
#include <string>
#include <vector>

#include "icbd/strategies.h"

namespace icbd {

enum class OracleLevel { kDominance, kIcbdStep, kWitness };

struct OracleReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> mismatches;  // smallest counterexample first
};

// Hooks that replace the solver side of the comparison. Tests use them to
// inject faults; by default the library functions are used.
struct OracleHooks {
  std::function<std::vector<int>(const StrategySpace&, int, const ConditionalProblem&)> bd_set;
  std::function<Restriction(const StrategySpace&, const Restriction&)> u_operator;
};

inline constexpr int kOracleOppCap = 12;

// Re-derives the sets from the raw definitions by enumerating every subset of
// opponent profiles, with no pruning or caching, and compares with the
// solver. Throws SizeCap if some |R_{-i}(h)| exceeds kOracleOppCap.
OracleReport OracleCheck(const StrategySpace& sp, const Restriction& r, OracleLevel level,
                         const OracleHooks& hooks = {});

}  // namespace icbd

#endif  // ICBD_ORACLE_H_
