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

#ifndef ICBD_GAME_H_
#define ICBD_GAME_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icbd/rational.h"

// Finite dynamic games with ordinal preferences, simultaneous moves and
// perfect recall. Histories and information sets carry dense ids assigned in
// depth-first order of the input; every downstream iteration order derives
// from these ids.

namespace icbd {

struct Move {
  int player = -1;
  int info_set = -1;
};

struct History {
  int id = -1;
  int parent = -1;
  // Joint action at the parent that leads here, one entry per parent mover.
  std::vector<int> incoming;
  // Active players, sorted by player index. Empty at terminal histories.
  std::vector<Move> movers;
  // One child per joint action profile; the first mover is most significant.
  std::vector<int> children;
  int depth = 0;
  // Index into the terminal set Z, or -1.
  int terminal = -1;
  std::string name;
};

struct InformationSet {
  int id = -1;
  int owner = -1;
  std::string label;
  std::vector<int> members;
  std::vector<std::string> actions;
};

// Lower rank is strictly better; equal ranks are indifferent.
struct OrdinalPreference {
  std::vector<int> rank;
};

// Structured input accepted by ValidateGame. Nodes reference children by
// name, so cycles and dangling references are representable and rejected.
struct RawMove {
  std::string player;
  std::string info_set;
  std::vector<std::string> actions;
};

struct RawNode {
  std::string name;
  std::vector<RawMove> moves;
  std::vector<std::string> children;
  std::string outcome;
};

struct RawGame {
  std::vector<std::string> players;
  std::string root;
  std::vector<RawNode> nodes;
  // Per player, indifference tiers over outcome labels, best tier first.
  std::vector<std::vector<std::vector<std::string>>> preferences;
};

class DynamicGame {
 public:
  int NumPlayers() const { return static_cast<int>(players_.size()); }
  const std::string& PlayerName(int i) const { return players_[i]; }
  int PlayerIndex(const std::string& name) const;

  const std::vector<History>& histories() const { return histories_; }
  const History& history(int id) const { return histories_[id]; }
  int root() const { return 0; }

  const std::vector<InformationSet>& info_sets() const { return info_sets_; }
  const InformationSet& info_set(int id) const { return info_sets_[id]; }
  const std::vector<int>& OwnInfoSets(int player) const {
    return own_info_sets_[player];
  }
  // Action chosen by `player` on the edge into history `x`, or -1 if the
  // player was not active at the parent.
  int IncomingAction(int x, int player) const;

  int NumTerminals() const { return static_cast<int>(terminals_.size()); }
  int TerminalHistory(int z) const { return terminals_[z]; }
  const std::string& TerminalLabel(int z) const { return terminal_labels_[z]; }
  int TerminalByLabel(const std::string& label) const;

  int Rank(int player, int z) const { return prefs_[player].rank[z]; }
  int MaxRank(int player) const { return max_rank_[player]; }
  const OrdinalPreference& preference(int player) const {
    return prefs_[player];
  }
  bool Prefers(int player, int z, int z2) const {
    return Rank(player, z) < Rank(player, z2);
  }
  bool Indifferent(int player, int z, int z2) const {
    return Rank(player, z) == Rank(player, z2);
  }

  // Child of `x` reached by the joint profile `joint` (one action per mover).
  int Child(int x, const std::vector<int>& joint) const;

  // True if `a` is a (weak) predecessor of `b`.
  bool IsPredecessor(int a, int b) const;

  // The canonical raw description this game was built from.
  const RawGame& raw() const { return raw_; }

 private:
  friend DynamicGame ValidateGame(const RawGame& raw);

  std::vector<std::string> players_;
  std::vector<History> histories_;
  std::vector<InformationSet> info_sets_;
  std::vector<std::vector<int>> own_info_sets_;
  std::vector<int> terminals_;
  std::vector<std::string> terminal_labels_;
  std::map<std::string, int> terminal_by_label_;
  std::vector<OrdinalPreference> prefs_;
  std::vector<int> max_rank_;
  RawGame raw_;
};

// Builds and checks a game. Errors: CycleInTree, InfoSetActionMismatch,
// PerfectRecallViolation, DanglingHistory, PreferenceDomainMismatch.
DynamicGame ValidateGame(const RawGame& raw);

struct GameClass {
  bool observable_actions = false;
  bool perfect_information = false;
};
GameClass ClassifyGame(const DynamicGame& g);

// Deepest common predecessor of two distinct terminals (terminal indices).
int LastCommonPredecessor(const DynamicGame& g, int z, int z2);

// Bottom-up helper for assembling RawGame values in code.
class GameBuilder {
 public:
  explicit GameBuilder(std::vector<std::string> players);

  int Terminal(const std::string& outcome);
  int Decision(std::vector<RawMove> moves, std::vector<int> children);
  // Single mover shorthand.
  int Decision(const std::string& player, const std::string& info_set,
               std::vector<std::string> actions, std::vector<int> children);

  // Tiers best first.
  void Tiers(const std::string& player,
             std::vector<std::vector<std::string>> tiers);
  // Tiers derived from numeric payoffs, higher is better.
  void Payoffs(const std::string& player,
               const std::map<std::string, Rational>& payoff);

  RawGame Raw(int root) const;
  DynamicGame Build(int root) const { return ValidateGame(Raw(root)); }

 private:
  std::vector<std::string> players_;
  std::vector<RawNode> nodes_;
  std::vector<std::vector<std::vector<std::string>>> prefs_;
};

}  // namespace icbd

#endif  // ICBD_GAME_H_
