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

#ifndef ICBD_DOMINANCE_H_
#define ICBD_DOMINANCE_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "icbd/strategies.h"

namespace icbd {

// Ranks of one player on a two-sided problem: rows are own strategies,
// columns are opponent profiles. Lower rank is better.
struct RankMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> r;
  int At(int x, int y) const { return r[static_cast<size_t>(x) * cols + y]; }
};

RankMatrix ProblemMatrix(const StrategySpace& sp, int i, const std::vector<int>& own,
                         const std::vector<int>& opp);

// Row-level relations restricted to a column subset (positions into the
// matrix columns).
bool RowWeaklyDominates(const RankMatrix& m, int a, int b, const std::vector<int>& cols);
bool RowStrictlyDominates(const RankMatrix& m, int a, int b, const std::vector<int>& cols);

// Exact B-dominance decision by peeling. Starting from all columns, repeat:
// take the lowest row t that weakly dominates `row` on the remaining set Q
// and drop the columns where t is strictly better. Every set on which `row`
// is admissible stays inside Q, so the row is B-dominated iff Q empties.
// The chain of (dominator, dropped columns) covers every nonempty subset:
// a subset's dominator is the first step whose dropped columns it meets.
struct PeelResult {
  bool dominated = false;
  std::vector<std::pair<int, std::vector<int>>> chain;  // row, dropped cols
  std::vector<int> admissible_cols;  // largest admissible set if not dominated
};
PeelResult PeelRow(const RankMatrix& m, int row);

// Definitional check over all 2^cols - 1 subsets. SizeCap above `cap` columns.
bool BDominatedExhaustive(const RankMatrix& m, int row, int cap = 20);

// Product-subset variant: columns carry per-opponent components and Q ranges
// over products of nonempty per-opponent subsets contained in the column set.
bool BDominatedProductSubsets(const RankMatrix& m, int row,
                              const std::vector<std::vector<int>>& col_components,
                              int cap = 20);

enum class DominanceKind { kStrict, kWeak };

struct DominanceWitness {
  int player = -1;
  int dominated = -1;
  int dominator = -1;
  DominanceKind kind = DominanceKind::kWeak;
  int info_set = -1;     // -1: the whole restriction
  std::vector<int> opp;  // opponent profiles the claim ranges over
};

// Replays a witness against the outcome function and preferences.
bool VerifyWitness(const StrategySpace& sp, const DominanceWitness& w);

struct BDominanceCertificate {
  int player = -1;
  int strategy = -1;
  int info_set = -1;
  std::vector<int> own;
  std::vector<int> opp;
  // Peeling chain in opponent-profile indices (arbitrary-subset mode).
  std::vector<std::pair<int, std::vector<int>>> chain;
  // Explicit entries (product-subset mode).
  std::vector<std::pair<std::vector<int>, int>> entries;

  // Weak dominator recorded for a nonempty subset of `opp`.
  int DominatorFor(const std::vector<int>& q) const;
  // Every nonempty subset with its dominator. SizeCap above 20 profiles.
  std::map<std::vector<int>, int> Expand() const;
};

bool VerifyCertificate(const StrategySpace& sp, const BDominanceCertificate& c);

struct BOptions {
  bool product_subsets = false;
};

bool StrictlyDominates(const StrategySpace& sp, int i, int s_star, int s, const Restriction& r);
bool WeaklyDominates(const StrategySpace& sp, int i, int s_star, int s, const Restriction& r);

// A_i(R).
std::vector<int> AdmissibleSet(const StrategySpace& sp, int i, const Restriction& r);

struct BDominatedResult {
  std::vector<int> dominated;
  std::map<int, BDominanceCertificate> certificates;
};

// bd_i on an explicit problem. Throws EmptyProblem.
BDominatedResult BDominatedSet(const StrategySpace& sp, int i, const ConditionalProblem& p,
                               const BOptions& opts = {});

// Lowest-id h in H_i(s) with R^i(h) nonempty and s in bd_i(R^i(h)).
std::optional<std::pair<int, BDominanceCertificate>> ConditionallyBDominated(
    const StrategySpace& sp, int i, int s, const Restriction& r, const BOptions& opts = {});

// Largest opponent subset of R_{-i}(h) on which s is admissible; empty if s
// is B-dominated there.
std::vector<int> MaximalAdmissibleSubset(const StrategySpace& sp, int i, int s,
                                         const ConditionalProblem& p);

// Splice: s' on own information sets following h, s elsewhere.
ReducedStrategy StrongReplacement(const StrategySpace& sp, int i, int h, const Restriction& r,
                                  int s, int s_prime);

// Global weak dominator built from a dominator at h.
DominanceWitness LiftWeakDominance(const StrategySpace& sp, int i, int h, const Restriction& r,
                                   int dominated, int dominator_at_h);

struct UElimination {
  int player = -1;
  int strategy = -1;
  int info_set = -1;
  BDominanceCertificate certificate;
};

// U(R): drops every strategy conditionally B-dominated with respect to R,
// recording the lowest witnessing information set.
Restriction UOperator(const StrategySpace& sp, const Restriction& r, const BOptions& opts = {},
                      std::vector<UElimination>* eliminated = nullptr);

}  // namespace icbd

#endif  // ICBD_DOMINANCE_H_
