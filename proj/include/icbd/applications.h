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

#ifndef ICBD_APPLICATIONS_H_
#define ICBD_APPLICATIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icbd/game.h"
#include "icbd/rational.h"
#include "icbd/solvers.h"

namespace icbd {

// ---------------------------------------------------------------------------
// Binary agendas with sequential majority voting.

struct AgendaNode {
  std::vector<int> alternatives;  // sorted indices into BinaryAgenda::alternatives
  int left = -1;
  int right = -1;
};

struct BinaryAgenda {
  std::vector<std::string> alternatives;
  std::vector<std::string> voters;          // voting order
  std::vector<std::vector<int>> prefs;      // per voter, alternatives best first
  std::vector<AgendaNode> nodes;
  int root = 0;
};

// Throws InvalidAgenda, EvenVoterCount or IndifferenceFound.
void ValidateAgenda(const BinaryAgenda& a);

// beats[k][k2]: a strict majority ranks k above k2.
std::vector<std::vector<bool>> MajorityRelation(const BinaryAgenda& a);

struct AgendaGame {
  DynamicGame game;
  std::vector<int> alternative_of_terminal;
};

// Every split becomes a public sequential vote in voter order; the majority
// branch continues. Terminals are labeled "<alternative>@<path>".
AgendaGame AgendaToGame(const BinaryAgenda& a);

// Outcome of sophisticated voting, by recursion on the majority relation.
int SophisticatedOutcome(const BinaryAgenda& a);

struct AgendaReport {
  int sophisticated = -1;
  std::vector<int> bi_alternatives;
  bool tdi = false;
  std::optional<int> icbd_alternative;  // absent when the strategy space is too large
  std::string icbd_status;
};

AgendaReport AnalyzeAgenda(const BinaryAgenda& a, int64_t profile_cap = int64_t{1} << 22);

// Every agenda tree over k alternatives, up to swapping children.
std::vector<BinaryAgenda> AllAgendaShapes(int k);

// ---------------------------------------------------------------------------
// Money burning.

struct MoneyBurnBaseGame {
  std::vector<std::string> actions_a;
  std::vector<std::string> actions_b;
  std::vector<std::vector<Rational>> v_a;  // [a_a][a_b]
  std::vector<std::vector<Rational>> v_b;
  int star_a = 0;
  int star_b = 0;
};

struct MoneyBurnConfig {
  Rational epsilon;
  int budget_cap = 1;  // burn levels 0..budget_cap
};

// Throws PreconditionViolated if the star profile conditions fail.
void ValidateBase(const MoneyBurnBaseGame& base);
Rational DeltaGap(const MoneyBurnBaseGame& base);
// max v_a - min v_a.
Rational Spread(const MoneyBurnBaseGame& base);
// ceil(spread / epsilon) + 1.
int DefaultBudgetCap(const MoneyBurnBaseGame& base, const Rational& epsilon);

// Throws EpsilonTooLarge if epsilon >= DeltaGap(base).
DynamicGame MoneyBurnGame(const MoneyBurnBaseGame& base, const MoneyBurnConfig& config);

struct MoneyBurnReport {
  SolveResult result;
  int predicted_terminal = -1;
  bool outcome_matches = false;
  std::vector<std::string> claim_failures;
};

MoneyBurnReport MoneyBurnSolve(const MoneyBurnBaseGame& base, const MoneyBurnConfig& config);

// Valid base game with small integer payoffs. Throws GenerationFailed.
MoneyBurnBaseGame RandomMoneyBurnBase(uint64_t seed, int actions_a = 2, int actions_b = 2,
                                      int max_payoff = 3);

}  // namespace icbd

#endif  // ICBD_APPLICATIONS_H_
