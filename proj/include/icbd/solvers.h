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

#ifndef ICBD_SOLVERS_H_
#define ICBD_SOLVERS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icbd/cardinal.h"
#include "icbd/dominance.h"
#include "icbd/strategies.h"
#include "icbd/witness.h"

namespace icbd {

// Why one strategy was removed. Exactly one of the reason fields is set,
// matching the operator that produced the record.
struct EliminationRecord {
  int player = -1;
  int strategy = -1;
  int info_set = -1;  // -1 when the scope is the whole restriction
  int dominator = -1;
  std::optional<BDominanceCertificate> certificate;
  std::optional<DominanceWitness> witness;
  std::optional<MixedStrategy> mixture;
};

struct TraceIteration {
  std::vector<EliminationRecord> eliminated;
  Restriction surviving;
};

struct EliminationTrace {
  std::vector<TraceIteration> iterations;
};

struct SolveResult {
  Restriction fixpoint;
  std::vector<int> outcomes;  // sorted terminal (outcome) indices
  EliminationTrace trace;
  int iterations_to_fixpoint = 0;  // effective rounds
  std::map<std::pair<int, int>, RationalityCertificate> certificates;
};

// U^infinity(R0); R0 defaults to S.
SolveResult Icbd(const StrategySpace& sp, const std::optional<Restriction>& r0 = std::nullopt,
                 const BOptions& opts = {});

// Iterates the sequential-rationality reduction through constructed
// certificates and attaches one per surviving strategy.
SolveResult Osr(const StrategySpace& sp, const std::optional<Restriction>& r0 = std::nullopt);

// M^infinity for a utility profile.
SolveResult Icd(const StrategySpace& sp, const std::vector<UtilityFunction>& utilities,
                const std::optional<Restriction>& r0 = std::nullopt);

// The operator that deletes at the owning information set only in the first
// round and everywhere afterwards.
SolveResult LocalFirstReduction(const StrategySpace& sp);

// Maximal simultaneous removal of weakly dominated strategies.
SolveResult IteratedAdmissibility(const StrategicForm& sf);

enum class OrderPolicy { kLowest, kSeeded, kScripted };

struct ReductionOrder {
  OrderPolicy policy = OrderPolicy::kLowest;
  uint64_t seed = 0;
  // (player, strategy) pairs taken in turn; the lowest candidate afterwards.
  std::vector<std::pair<int, int>> script;
};

// One weakly dominated strategy per step until none remains.
SolveResult FullReductionWeakDominance(const StrategicForm& sf, const ReductionOrder& order);

// Weakly dominated strategies of player i relative to R, with the lowest
// weak dominator of each.
std::map<int, int> WeaklyDominatedInForm(const StrategicForm& sf, int i, const Restriction& r);

// Outcome indices reached by profiles of R.
std::vector<int> FormOutcomes(const StrategicForm& sf, const Restriction& r);

struct BackwardInductionResult {
  std::vector<int> outcomes;  // every outcome reachable by some SPE
  bool unique = false;
  int spe_outcome = -1;       // outcome of the first-max SPE
  std::map<int, int> spe;     // history id -> chosen action
};

// Throws NotPerfectInformation.
BackwardInductionResult BackwardInduction(const DynamicGame& g);

struct NrtViolation {
  int z = -1;
  int z2 = -1;
  int player = -1;
};

std::optional<NrtViolation> CheckNrt(const DynamicGame& g);

struct TdiViolation {
  int player = -1;
  int s = -1;
  int s2 = -1;
  std::vector<int> profile;  // the common opponent strategies, own entry -1
  int other = -1;            // a player who is not indifferent
};

std::optional<TdiViolation> CheckTdi(const StrategicForm& sf);

struct TdiTreeViolation {
  int z = -1;
  int z2 = -1;
  int mover = -1;
  int other = -1;
};

// TDI of the reduced strategic form of a perfect-information game, decided on
// the tree: it fails exactly when the mover at the last common predecessor of
// two outcomes is indifferent between them and someone else is not.
std::optional<TdiTreeViolation> CheckTdiTree(const DynamicGame& g);

}  // namespace icbd

#endif  // ICBD_SOLVERS_H_
