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

#ifndef ICBD_CARDINAL_H_
#define ICBD_CARDINAL_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icbd/dominance.h"
#include "icbd/rational.h"
#include "icbd/strategies.h"

// Mixed extension: Bernoulli utilities, conditional probability systems and
// dominance by mixed strategies. Everything is exact.

namespace icbd {

// Values indexed by terminal index.
struct UtilityFunction {
  int owner = -1;
  std::vector<Rational> values;

  const Rational& operator()(int z) const { return values[z]; }
};

// MaxRank - rank: integers consistent with the preference.
UtilityFunction CanonicalUtility(const DynamicGame& g, int i);

// True if u(z) >= u(z') exactly when z is weakly preferred to z', for all
// pairs drawn from `domain` (all terminals if empty).
bool ValidateOrigination(const DynamicGame& g, const UtilityFunction& u,
                         const std::vector<int>& domain = {});

struct MixedStrategy {
  int owner = -1;
  std::map<int, Rational> weights;  // strategy index -> probability
};

// Sparse probability measure over opponent-profile indices.
using Measure = std::map<int, Rational>;

// Key for the unconditional event S_{-i}.
inline constexpr int kWholeSpace = -1;

// One measure per conditioning event, keyed by an owned information set id
// or kWholeSpace. Sets with the same event must carry the same measure.
struct ConditionalProbabilitySystem {
  int owner = -1;
  std::map<int, Measure> measures;
};

struct CpsViolation {
  std::string axiom;  // "A1", "A2" or "A3"
  int event = -1;     // key of the offending measure (inner event for A3)
  int outer = -1;     // outer event for A3
  int profile = -1;   // offending opponent profile, if any
  std::string detail;
};

// S_{-i}(h) for an owned h, or every opponent profile for kWholeSpace.
std::vector<int> ConditioningEvent(const StrategySpace& sp, int i, int key);

// Exact check of A1-A3 over every key of mu plus the events of i's
// information sets. Throws UnknownConditioningEvent for foreign keys.
std::vector<CpsViolation> ValidateCps(const StrategySpace& sp,
                                      const ConditionalProbabilitySystem& mu);

Rational ExpectedUtility(const StrategySpace& sp, int i, int s, const Measure& m,
                         const UtilityFunction& u);

// U^h_i restricted to R. Throws InvalidCPS if the measure at h is not a
// probability on S_{-i}(h).
Rational ExpectedUtilityAt(const StrategySpace& sp, int i, int h, const MixedStrategy& sigma,
                           const ConditionalProbabilitySystem& mu, const UtilityFunction& u,
                           const Restriction& r);

// A mixture over the problem's own side that strictly beats s against every
// opponent profile of the problem, maximizing the smallest margin.
std::optional<MixedStrategy> MixedStrictlyDominated(const StrategySpace& sp, int i, int s,
                                                    const ConditionalProblem& p,
                                                    const UtilityFunction& u);

// A belief over the problem's opponent side against which s is a best reply
// among the problem's own strategies.
std::optional<Measure> BestReplyBelief(const StrategySpace& sp, int i, int s,
                                       const ConditionalProblem& p, const UtilityFunction& u);

struct MdElimination {
  int player = -1;
  int strategy = -1;
  int info_set = -1;
  MixedStrategy dominator;
};

// M(R) for a utility profile (one per player).
Restriction MOperator(const StrategySpace& sp, const Restriction& r,
                      const std::vector<UtilityFunction>& u,
                      std::vector<MdElimination>* eliminated = nullptr);

// Same reduction computed through best-reply beliefs at every relevant
// information set.
Restriction BeliefOperator(const StrategySpace& sp, const Restriction& r,
                           const std::vector<UtilityFunction>& u);

}  // namespace icbd

#endif  // ICBD_CARDINAL_H_
