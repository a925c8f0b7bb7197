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

#ifndef ICBD_STRATEGIES_H_
#define ICBD_STRATEGIES_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "icbd/game.h"

namespace icbd {

// A plan of action: choices on exactly the owner's information sets that are
// not precluded by the owner's own earlier choices.
struct ReducedStrategy {
  int owner = -1;
  std::map<int, int> choices;  // information set id -> action index

  bool operator==(const ReducedStrategy& o) const {
    return owner == o.owner && choices == o.choices;
  }
};

// A per-player product subset of strategy indices, each factor sorted.
struct Restriction {
  std::vector<std::vector<int>> sets;

  bool Contains(int player, int s) const;
  bool IsSubsetOf(const Restriction& other) const;
  bool Empty() const;
  int64_t NumProfiles() const;
  bool operator==(const Restriction& o) const { return sets == o.sets; }
  bool operator!=(const Restriction& o) const { return sets != o.sets; }
};

// R^i(h): own strategies reaching h, and the opponent profiles (indices in
// the owner's opponent-profile numbering) reaching h. The opponent side is
// an explicit set, never forced into product form.
struct ConditionalProblem {
  int owner = -1;
  int info_set = -1;
  std::vector<int> own;
  std::vector<int> opp;

  bool Nonempty() const { return !own.empty() && !opp.empty(); }
};

// Reduced strategic form: players, strategy sets and an outcome tensor.
// Also used on its own for normal-form experiments.
struct StrategicForm {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategy_names;
  std::vector<std::string> outcome_labels;
  std::vector<std::vector<int>> rank;  // [player][outcome], lower is better
  std::vector<int> outcome;            // flat profile -> outcome index

  int NumPlayers() const { return static_cast<int>(players.size()); }
  int NumStrategies(int i) const {
    return static_cast<int>(strategy_names[i].size());
  }
  int64_t NumProfiles() const { return static_cast<int64_t>(outcome.size()); }
  // Player 0 is the most significant digit.
  int64_t Flat(const std::vector<int>& profile) const;
  std::vector<int> Unflatten(int64_t flat) const;
  int Outcome(const std::vector<int>& profile) const {
    return outcome[Flat(profile)];
  }
  Restriction Full() const;
};

class StrategySpace {
 public:
  static constexpr int64_t kDefaultProfileCap = int64_t{1} << 24;

  // Enumerates every player's reduced strategies and the outcome tensor.
  // Throws SizeCap if the profile count exceeds `profile_cap`.
  explicit StrategySpace(const DynamicGame& g,
                         int64_t profile_cap = kDefaultProfileCap);

  const DynamicGame& game() const { return g_; }
  int NumPlayers() const { return g_.NumPlayers(); }
  int NumStrategies(int i) const {
    return static_cast<int>(strategies_[i].size());
  }
  const ReducedStrategy& Strategy(int i, int s) const { return strategies_[i][s]; }
  const std::vector<ReducedStrategy>& Strategies(int i) const { return strategies_[i]; }
  const std::string& Name(int i, int s) const { return names_[i][s]; }
  // Index of a strategy by name, or -1.
  int Find(int i, const std::string& name) const;
  // Index of a plan, or -1 if it is not a valid reduced strategy.
  int IndexOf(const ReducedStrategy& s) const;

  int64_t NumProfiles() const { return static_cast<int64_t>(outcome_.size()); }
  int64_t Flat(const std::vector<int>& profile) const;
  std::vector<int> Unflatten(int64_t flat) const;
  int OutcomeFlat(int64_t flat) const { return outcome_[flat]; }
  int Outcome(const std::vector<int>& profile) const { return outcome_[Flat(profile)]; }

  // Opponent profiles of player i: players j != i in increasing order, first
  // most significant.
  int NumOpp(int i) const { return num_opp_[i]; }
  int64_t FlatWith(int i, int s, int opp) const;
  std::vector<int> OppProfile(int i, int opp) const;  // entry i is -1
  int OppIndex(int i, const std::vector<int>& profile) const;
  int OutcomeOpp(int i, int s, int opp) const { return outcome_[FlatWith(i, s, opp)]; }
  int OppComponent(int i, int opp, int j) const;

  // s in S_j(x) for a history x.
  bool ReachesHistory(int j, int s, int x) const { return reach_node_[j][s][x] != 0; }
  // s in S_j(h) for any information set h.
  bool Reaches(int j, int s, int h) const { return reach_info_[h][j][s] != 0; }
  // S_{-i}(h) for h owned by i, as sorted opponent-profile indices.
  const std::vector<int>& OppReach(int h) const { return opp_reach_[h]; }
  // Membership mask for OppReach(h).
  bool OppReaches(int h, int opp) const { return opp_reach_mask_[h][opp] != 0; }

  // H(s_i): every information set h with s_i in S_i(h).
  std::vector<int> AllowedInfoSets(int i, int s) const;
  // H_i(s_i): the owned subset.
  std::vector<int> OwnAllowedInfoSets(int i, int s) const;

  // Own information sets of i following h (h included), by tree order.
  bool Follows(int h, int h2) const { return follows_[h][h2] != 0; }

  Restriction Full() const;
  StrategicForm ToStrategicForm() const;

 private:
  void Enumerate(int i, int64_t limit);

  DynamicGame g_;
  std::vector<std::vector<ReducedStrategy>> strategies_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::map<std::map<int, int>, int>> index_of_;
  std::vector<int64_t> stride_;
  std::vector<int> num_opp_;
  std::vector<std::vector<int64_t>> opp_stride_;  // [i][j], 0 for j == i
  std::vector<int> outcome_;
  std::vector<std::vector<std::vector<char>>> reach_node_;  // [j][s][x]
  std::vector<std::vector<std::vector<char>>> reach_info_;  // [h][j][s]
  std::vector<std::vector<int>> opp_reach_;                 // [h]
  std::vector<std::vector<char>> opp_reach_mask_;           // [h][opp]
  std::vector<std::vector<char>> follows_;                  // [h][h2]
};

// Terminal reached by a complete profile of plans (one per player, in player
// order). Plans may be reduced or standard. Throws IncompleteProfile.
int OutcomeOfPlans(const DynamicGame& g, const std::vector<ReducedStrategy>& plans);

// R^i(h) for the owner i of h.
ConditionalProblem ReachingSets(const StrategySpace& sp, int h, const Restriction& r);

// R_{-i} as opponent-profile indices.
std::vector<int> RestrictedOpp(const StrategySpace& sp, int i, const Restriction& r);
bool OppInRestriction(const StrategySpace& sp, int i, int opp, const Restriction& r);

// Z(R), sorted terminal indices.
std::vector<int> OutcomesOf(const StrategySpace& sp, const Restriction& r);

// Human-readable profile, e.g. "(IT, L)".
std::string ProfileName(const StrategySpace& sp, const std::vector<int>& profile);

}  // namespace icbd

#endif  // ICBD_STRATEGIES_H_
