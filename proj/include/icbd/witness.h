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

#ifndef ICBD_WITNESS_H_
#define ICBD_WITNESS_H_

#include <map>
#include <string>
#include <vector>

#include "icbd/cardinal.h"
#include "icbd/strategies.h"

// Explicit (utility, CPS) pairs certifying sequential rationality of a
// strategy given a restriction.
//
// Beliefs are built as a lexicographic sequence of disjoint levels, each a
// full-support distribution on a set of opponent profiles. The measure at an
// event is the first level meeting it, conditioned on the event, so the chain
// rule holds by construction. Utilities are built one indifference class at a
// time from the strategy's worst outcome upwards.

namespace icbd {

struct RationalityCertificate {
  int player = -1;
  int strategy = -1;
  Restriction restriction;
  UtilityFunction utility;
  ConditionalProbabilitySystem cps;
  bool cautious = false;
  // When false, the utility only needs to be weakly order preserving.
  bool strict_origin = true;
};

struct CertificateReport {
  bool ok = true;
  std::vector<std::string> violations;
};

CertificateReport CheckRationalityCertificate(const StrategySpace& sp,
                                              const RationalityCertificate& cert);
bool VerifyRationalityCertificate(const StrategySpace& sp, const RationalityCertificate& cert);

struct WitnessOptions {
  // Add a small multiple of the canonical utility so that the result
  // represents the preference exactly. Off: the raw step utility, which is
  // {0, 1}-valued when R_{-i} is a single profile.
  bool strict_origin = true;
  // Opponent sides up to this size are searched exhaustively for a belief
  // hierarchy when the greedy choice fails.
  int backtrack_cap = 12;
};

// Cautious certificate: full support on R_{-i}(h) at every relevant h.
// Throws HypothesisViolated if s is weakly dominated on some nonempty R^i(h).
RationalityCertificate ConstructWitness(const StrategySpace& sp, int i, int s,
                                        const Restriction& r, const WitnessOptions& opts = {});

// Certificate with beliefs inside R_{-i}. Throws HypothesisViolated if s is
// conditionally B-dominated, WitnessSearchExhausted if no hierarchy is found.
RationalityCertificate ConstructSequentialWitness(const StrategySpace& sp, int i, int s,
                                                  const Restriction& r,
                                                  const WitnessOptions& opts = {});

// Strategies of R_i with a constructed and verified sequential certificate.
std::vector<int> RationalitySet(const StrategySpace& sp, int i, const Restriction& r,
                                std::map<int, RationalityCertificate>* certificates = nullptr);

// u in the originating family with U_i(R) inside M_i(R)[u]. Throws
// WitnessSearchExhausted when no candidate works.
UtilityFunction UtilityWitnessForOperator(const StrategySpace& sp, int i, const Restriction& r);

// Per information set, integer ranks over R_i(h) (lower is better).
using ConditionalRankings = std::map<int, std::map<int, int>>;

struct MonotonicityReport {
  bool weak_ok = true;
  bool strong_ok = true;
  std::vector<std::string> violations;
};

// Throws DomainMismatch if the rankings do not cover exactly the nonempty
// conditional problems of i.
MonotonicityReport CheckConditionalMonotonicity(const StrategySpace& sp, int i,
                                                const Restriction& r,
                                                const ConditionalRankings& rankings);

// Expected-utility rankings at every nonempty R^i(h) under a certificate.
ConditionalRankings RankingsFromCertificate(const StrategySpace& sp,
                                            const RationalityCertificate& cert);

enum class RationalizationMode { kCm, kCseu };

bool RationalizePreferencePair(const StrategySpace& sp, int i, int s, const Restriction& r,
                               RationalizationMode mode,
                               RationalityCertificate* certificate = nullptr);

}  // namespace icbd

#endif  // ICBD_WITNESS_H_
