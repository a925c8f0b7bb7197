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

#include "icbd/game.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "icbd/errors.h"

namespace icbd {

int DynamicGame::PlayerIndex(const std::string& name) const {
  for (int i = 0; i < NumPlayers(); ++i) {
    if (players_[i] == name) return i;
  }
  return -1;
}

int DynamicGame::TerminalByLabel(const std::string& label) const {
  auto it = terminal_by_label_.find(label);
  return it == terminal_by_label_.end() ? -1 : it->second;
}

int DynamicGame::IncomingAction(int x, int player) const {
  const History& h = histories_[x];
  if (h.parent < 0) return -1;
  const History& p = histories_[h.parent];
  for (size_t k = 0; k < p.movers.size(); ++k) {
    if (p.movers[k].player == player) return h.incoming[k];
  }
  return -1;
}

int DynamicGame::Child(int x, const std::vector<int>& joint) const {
  const History& h = histories_[x];
  int idx = 0;
  for (size_t k = 0; k < h.movers.size(); ++k) {
    idx = idx * static_cast<int>(info_sets_[h.movers[k].info_set].actions.size()) +
          joint[k];
  }
  return h.children[idx];
}

bool DynamicGame::IsPredecessor(int a, int b) const {
  while (b >= 0) {
    if (a == b) return true;
    b = histories_[b].parent;
  }
  return false;
}

namespace {

struct PendingNode {
  const RawNode* raw = nullptr;
  std::vector<int> player_of_move;   // input move order -> player index
  std::vector<int> order;            // sorted position -> input move index
};

}  // namespace

DynamicGame ValidateGame(const RawGame& raw) {
  DynamicGame g;
  if (raw.players.empty()) Fail(ErrorCode::kSchemaError, "no players");
  {
    std::set<std::string> seen;
    for (const auto& p : raw.players) {
      if (p.empty() || !seen.insert(p).second) {
        Fail(ErrorCode::kSchemaError, "duplicate or empty player name '" + p + "'");
      }
    }
  }
  g.players_ = raw.players;
  const int n = g.NumPlayers();

  std::map<std::string, int> by_name;
  for (size_t k = 0; k < raw.nodes.size(); ++k) {
    if (!by_name.emplace(raw.nodes[k].name, static_cast<int>(k)).second) {
      Fail(ErrorCode::kSchemaError, "duplicate node name '" + raw.nodes[k].name + "'");
    }
  }
  auto root_it = by_name.find(raw.root);
  if (root_it == by_name.end()) {
    Fail(ErrorCode::kDanglingHistory, "root '" + raw.root + "' is not a node");
  }

  // Depth-first traversal: cycle and multi-parent detection, preorder ids.
  std::vector<int> state(raw.nodes.size(), 0);
  std::vector<int> preorder;
  std::vector<int> parent_of(raw.nodes.size(), -1);
  std::function<void(int)> visit = [&](int k) {
    state[k] = 1;
    preorder.push_back(k);
    for (const auto& c : raw.nodes[k].children) {
      auto it = by_name.find(c);
      if (it == by_name.end()) {
        Fail(ErrorCode::kDanglingHistory,
             "node '" + raw.nodes[k].name + "' references unknown child '" + c + "'");
      }
      int ck = it->second;
      if (state[ck] == 1) {
        Fail(ErrorCode::kCycleInTree, "cycle through node '" + c + "'");
      }
      if (state[ck] == 2) {
        Fail(ErrorCode::kCycleInTree, "node '" + c + "' has more than one parent");
      }
      parent_of[ck] = k;
      visit(ck);
    }
    state[k] = 2;
  };
  visit(root_it->second);
  for (size_t k = 0; k < raw.nodes.size(); ++k) {
    if (state[k] == 0) {
      Fail(ErrorCode::kDanglingHistory,
           "node '" + raw.nodes[k].name + "' is not reachable from the root");
    }
  }

  std::vector<int> id_of(raw.nodes.size(), -1);
  for (size_t pos = 0; pos < preorder.size(); ++pos) id_of[preorder[pos]] = static_cast<int>(pos);

  // Movers, info sets and children in canonical (player-sorted) order.
  g.histories_.resize(preorder.size());
  std::map<std::pair<int, std::string>, int> info_by_key;
  g.own_info_sets_.assign(n, {});
  std::vector<PendingNode> pending(preorder.size());
  for (size_t pos = 0; pos < preorder.size(); ++pos) {
    const RawNode& rn = raw.nodes[preorder[pos]];
    History& h = g.histories_[pos];
    h.id = static_cast<int>(pos);
    h.name = rn.name;
    h.parent = parent_of[preorder[pos]] < 0 ? -1 : id_of[parent_of[preorder[pos]]];
    h.depth = h.parent < 0 ? 0 : g.histories_[h.parent].depth + 1;
    if (rn.moves.empty()) {
      if (!rn.children.empty()) {
        Fail(ErrorCode::kSchemaError, "node '" + rn.name + "' has children but no movers");
      }
      if (rn.outcome.empty()) {
        Fail(ErrorCode::kSchemaError, "terminal node '" + rn.name + "' has no outcome label");
      }
      h.terminal = static_cast<int>(g.terminals_.size());
      g.terminals_.push_back(h.id);
      g.terminal_labels_.push_back(rn.outcome);
      if (!g.terminal_by_label_.emplace(rn.outcome, h.terminal).second) {
        Fail(ErrorCode::kPreferenceDomainMismatch,
             "outcome label '" + rn.outcome + "' used by two terminal histories");
      }
      continue;
    }
    if (!rn.outcome.empty()) {
      Fail(ErrorCode::kSchemaError, "non-terminal node '" + rn.name + "' carries an outcome");
    }
    PendingNode& pn = pending[pos];
    pn.raw = &rn;
    std::set<int> seen_players;
    size_t product = 1;
    for (const auto& m : rn.moves) {
      int p = g.PlayerIndex(m.player);
      if (p < 0) Fail(ErrorCode::kSchemaError, "unknown player '" + m.player + "'");
      if (!seen_players.insert(p).second) {
        Fail(ErrorCode::kSchemaError, "player '" + m.player + "' moves twice at '" + rn.name + "'");
      }
      if (m.actions.empty()) {
        Fail(ErrorCode::kInfoSetActionMismatch, "empty action list at '" + rn.name + "'");
      }
      std::set<std::string> labels(m.actions.begin(), m.actions.end());
      if (labels.size() != m.actions.size()) {
        Fail(ErrorCode::kInfoSetActionMismatch, "repeated action label at '" + rn.name + "'");
      }
      pn.player_of_move.push_back(p);
      product *= m.actions.size();
    }
    if (rn.children.size() != product) {
      Fail(ErrorCode::kDanglingHistory,
           "node '" + rn.name + "' has " + std::to_string(rn.children.size()) +
               " children for " + std::to_string(product) + " joint profiles");
    }
    pn.order.resize(rn.moves.size());
    for (size_t k = 0; k < pn.order.size(); ++k) pn.order[k] = static_cast<int>(k);
    std::sort(pn.order.begin(), pn.order.end(), [&](int a, int b) {
      return pn.player_of_move[a] < pn.player_of_move[b];
    });
    for (int mk : pn.order) {
      const RawMove& m = rn.moves[mk];
      int p = pn.player_of_move[mk];
      auto key = std::make_pair(p, m.info_set);
      auto it = info_by_key.find(key);
      int hid;
      if (it == info_by_key.end()) {
        hid = static_cast<int>(g.info_sets_.size());
        info_by_key.emplace(key, hid);
        InformationSet is;
        is.id = hid;
        is.owner = p;
        is.label = m.info_set;
        is.actions = m.actions;
        g.info_sets_.push_back(is);
        g.own_info_sets_[p].push_back(hid);
      } else {
        hid = it->second;
        if (g.info_sets_[hid].actions != m.actions) {
          Fail(ErrorCode::kInfoSetActionMismatch,
               "information set '" + m.info_set + "' offers different actions at '" +
                   rn.name + "'");
        }
      }
      g.info_sets_[hid].members.push_back(h.id);
      h.movers.push_back(Move{p, hid});
    }
  }

  // Children in canonical joint order; incoming joint actions.
  for (size_t pos = 0; pos < preorder.size(); ++pos) {
    History& h = g.histories_[pos];
    if (h.movers.empty()) continue;
    const PendingNode& pn = pending[pos];
    const size_t m = h.movers.size();
    std::vector<int> sizes_in(m);
    for (size_t k = 0; k < m; ++k) sizes_in[k] = static_cast<int>(pn.raw->moves[k].actions.size());
    size_t total = pn.raw->children.size();
    h.children.assign(total, -1);
    for (size_t in_idx = 0; in_idx < total; ++in_idx) {
      // Decode the input joint profile (input move order, first most significant).
      std::vector<int> joint_in(m);
      size_t rem = in_idx;
      for (size_t k = m; k-- > 0;) {
        joint_in[k] = static_cast<int>(rem % sizes_in[k]);
        rem /= sizes_in[k];
      }
      size_t canon = 0;
      std::vector<int> joint(m);
      for (size_t k = 0; k < m; ++k) {
        joint[k] = joint_in[pn.order[k]];
        canon = canon * sizes_in[pn.order[k]] + joint[k];
      }
      int child = id_of[by_name.at(pn.raw->children[in_idx])];
      h.children[canon] = child;
      g.histories_[child].incoming = joint;
    }
  }

  // Perfect recall: each member of an information set shows its owner the
  // same sequence of (own information set, own action) pairs.
  {
    std::vector<std::vector<std::pair<int, int>>> sig(n);
    std::vector<std::vector<std::pair<int, int>>> expected(g.info_sets_.size());
    std::vector<bool> have(g.info_sets_.size(), false);
    std::function<void(int)> walk = [&](int x) {
      const History& h = g.histories_[x];
      for (const Move& mv : h.movers) {
        for (const auto& pr : sig[mv.player]) {
          if (pr.first == mv.info_set) {
            Fail(ErrorCode::kPerfectRecallViolation,
                 "information set '" + g.info_sets_[mv.info_set].label +
                     "' is visited twice on one path");
          }
        }
        if (!have[mv.info_set]) {
          have[mv.info_set] = true;
          expected[mv.info_set] = sig[mv.player];
        } else if (expected[mv.info_set] != sig[mv.player]) {
          Fail(ErrorCode::kPerfectRecallViolation,
               "members of information set '" + g.info_sets_[mv.info_set].label +
                   "' have different own-action pasts");
        }
      }
      for (int c : h.children) {
        const History& ch = g.histories_[c];
        for (size_t k = 0; k < h.movers.size(); ++k) {
          sig[h.movers[k].player].emplace_back(h.movers[k].info_set, ch.incoming[k]);
        }
        walk(c);
        for (const Move& mv : h.movers) sig[mv.player].pop_back();
      }
    };
    walk(0);
  }

  // Preferences.
  if (raw.preferences.size() != static_cast<size_t>(n)) {
    Fail(ErrorCode::kPreferenceDomainMismatch,
         "expected a ranking for each of the " + std::to_string(n) + " players");
  }
  g.prefs_.assign(n, OrdinalPreference{});
  g.max_rank_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> rank(g.terminals_.size(), -1);
    int r = 0;
    for (const auto& tier : raw.preferences[i]) {
      if (tier.empty()) {
        Fail(ErrorCode::kPreferenceDomainMismatch, "empty tier for player '" + g.players_[i] + "'");
      }
      for (const auto& label : tier) {
        int z = g.TerminalByLabel(label);
        if (z < 0) {
          Fail(ErrorCode::kPreferenceDomainMismatch,
               "player '" + g.players_[i] + "' ranks unknown outcome '" + label + "'");
        }
        if (rank[z] >= 0) {
          Fail(ErrorCode::kPreferenceDomainMismatch,
               "player '" + g.players_[i] + "' ranks outcome '" + label + "' twice");
        }
        rank[z] = r;
      }
      ++r;
    }
    for (size_t z = 0; z < rank.size(); ++z) {
      if (rank[z] < 0) {
        Fail(ErrorCode::kPreferenceDomainMismatch,
             "player '" + g.players_[i] + "' does not rank outcome '" +
                 g.terminal_labels_[z] + "'");
      }
    }
    g.prefs_[i].rank = rank;
    g.max_rank_[i] = r - 1;
  }

  // Canonical raw copy: nodes in preorder, moves in player order.
  g.raw_.players = raw.players;
  g.raw_.root = g.histories_[0].name;
  g.raw_.preferences = raw.preferences;
  for (const History& h : g.histories_) {
    RawNode rn;
    rn.name = h.name;
    if (h.terminal >= 0) {
      rn.outcome = g.terminal_labels_[h.terminal];
    } else {
      for (const Move& mv : h.movers) {
        rn.moves.push_back(RawMove{g.players_[mv.player], g.info_sets_[mv.info_set].label,
                                   g.info_sets_[mv.info_set].actions});
      }
      for (int c : h.children) rn.children.push_back(g.histories_[c].name);
    }
    g.raw_.nodes.push_back(std::move(rn));
  }
  return g;
}

GameClass ClassifyGame(const DynamicGame& g) {
  GameClass c;
  c.observable_actions = true;
  for (const auto& is : g.info_sets()) {
    if (is.members.size() != 1) c.observable_actions = false;
  }
  c.perfect_information = c.observable_actions;
  for (const auto& h : g.histories()) {
    if (h.terminal < 0 && h.movers.size() != 1) c.perfect_information = false;
  }
  return c;
}

int LastCommonPredecessor(const DynamicGame& g, int z, int z2) {
  if (z == z2) Fail(ErrorCode::kSameHistory, "terminals coincide");
  int a = g.TerminalHistory(z);
  int b = g.TerminalHistory(z2);
  while (g.history(a).depth > g.history(b).depth) a = g.history(a).parent;
  while (g.history(b).depth > g.history(a).depth) b = g.history(b).parent;
  while (a != b) {
    a = g.history(a).parent;
    b = g.history(b).parent;
  }
  return a;
}

GameBuilder::GameBuilder(std::vector<std::string> players)
    : players_(std::move(players)), prefs_(players_.size()) {}

int GameBuilder::Terminal(const std::string& outcome) {
  RawNode rn;
  rn.name = "n" + std::to_string(nodes_.size());
  rn.outcome = outcome;
  nodes_.push_back(std::move(rn));
  return static_cast<int>(nodes_.size()) - 1;
}

int GameBuilder::Decision(std::vector<RawMove> moves, std::vector<int> children) {
  RawNode rn;
  rn.name = "n" + std::to_string(nodes_.size());
  rn.moves = std::move(moves);
  for (int c : children) rn.children.push_back(nodes_.at(c).name);
  nodes_.push_back(std::move(rn));
  return static_cast<int>(nodes_.size()) - 1;
}

int GameBuilder::Decision(const std::string& player, const std::string& info_set,
                          std::vector<std::string> actions, std::vector<int> children) {
  return Decision({RawMove{player, info_set, std::move(actions)}}, std::move(children));
}

void GameBuilder::Tiers(const std::string& player,
                        std::vector<std::vector<std::string>> tiers) {
  for (size_t i = 0; i < players_.size(); ++i) {
    if (players_[i] == player) {
      prefs_[i] = std::move(tiers);
      return;
    }
  }
  Fail(ErrorCode::kSchemaError, "unknown player '" + player + "'");
}

void GameBuilder::Payoffs(const std::string& player,
                          const std::map<std::string, Rational>& payoff) {
  std::map<Rational, std::vector<std::string>, std::greater<Rational>> by_value;
  for (const auto& [label, v] : payoff) by_value[v].push_back(label);
  std::vector<std::vector<std::string>> tiers;
  for (auto& [v, labels] : by_value) tiers.push_back(labels);
  Tiers(player, std::move(tiers));
}

RawGame GameBuilder::Raw(int root) const {
  RawGame raw;
  raw.players = players_;
  raw.root = nodes_.at(root).name;
  raw.preferences = prefs_;
  std::map<std::string, int> by_name;
  for (size_t k = 0; k < nodes_.size(); ++k) by_name[nodes_[k].name] = static_cast<int>(k);
  std::vector<int> stack = {root};
  std::vector<bool> seen(nodes_.size(), false);
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    if (seen[k]) continue;
    seen[k] = true;
    raw.nodes.push_back(nodes_[k]);
    for (const auto& c : nodes_[k].children) stack.push_back(by_name.at(c));
  }
  return raw;
}

}  // namespace icbd
