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

#ifndef ICBD_LP_H_
#define ICBD_LP_H_

#include <vector>

#include "icbd/rational.h"

// Dense two-phase simplex over exact rationals with Bland's rule. Intended
// for the small dominance programs built in cardinal.cc.

namespace icbd {

enum class LpSense { kLe, kGe, kEq };

struct LpRow {
  std::vector<Rational> coeffs;
  LpSense sense = LpSense::kLe;
  Rational rhs;
};

// maximize objective . x subject to rows, x >= 0.
struct LpProblem {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

// Throws LpDegenerate if the pivot count exceeds a safety bound, which Bland's
// rule makes unreachable.
LpSolution SolveLp(const LpProblem& problem);

}  // namespace icbd

#endif  // ICBD_LP_H_
