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

#include "icbd/strategies.h"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "icbd/errors.h"

namespace icbd {

bool Restriction::Contains(int player, int s) const {
  const auto& v = sets[player];
  return std::binary_search(v.begin(), v.end(), s);
}

bool Restriction::IsSubsetOf(const Restriction& other) const {
  if (sets.size() != other.sets.size()) return false;
  for (size_t i = 0; i < sets.size(); ++i) {
    if (!std::includes(other.sets[i].begin(), other.sets[i].end(), sets[i].begin(),
                       sets[i].end())) {
      return false;
    }
  }
  return true;
}

bool Restriction::Empty() const {
  for (const auto& s : sets) {
    if (s.empty()) return true;
  }
  return false;
}

int64_t Restriction::NumProfiles() const {
  int64_t n = 1;
  for (const auto& s : sets) n *= static_cast<int64_t>(s.size());
  return n;
}

int64_t StrategicForm::Flat(const std::vector<int>& profile) const {
  int64_t f = 0;
  for (int i = 0; i < NumPlayers(); ++i) f = f * NumStrategies(i) + profile[i];
  return f;
}

std::vector<int> StrategicForm::Unflatten(int64_t flat) const {
  std::vector<int> p(NumPlayers());
  for (int i = NumPlayers(); i-- > 0;) {
    p[i] = static_cast<int>(flat % NumStrategies(i));
    flat /= NumStrategies(i);
  }
  return p;
}

Restriction StrategicForm::Full() const {
  Restriction r;
  for (int i = 0; i < NumPlayers(); ++i) {
    std::vector<int> v(NumStrategies(i));
    for (int s = 0; s < NumStrategies(i); ++s) v[s] = s;
    r.sets.push_back(v);
  }
  return r;
}

StrategySpace::StrategySpace(const DynamicGame& g, int64_t profile_cap) : g_(g) {
  const int n = g_.NumPlayers();
  const int nodes = static_cast<int>(g_.histories().size());
  strategies_.resize(n);
  names_.resize(n);
  index_of_.resize(n);
  int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    Enumerate(i, profile_cap / total);
    total *= NumStrategies(i);
    if (total > profile_cap) {
      Fail(ErrorCode::kSizeCap, "strategy profile count exceeds " + std::to_string(profile_cap));
    }
  }

  stride_.assign(n, 1);
  for (int i = n - 1; i > 0; --i) stride_[i - 1] = stride_[i] * NumStrategies(i);
  num_opp_.assign(n, 1);
  opp_stride_.assign(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    int64_t m = 1;
    for (int j = n - 1; j >= 0; --j) {
      if (j == i) continue;
      opp_stride_[i][j] = m;
      m *= NumStrategies(j);
    }
    num_opp_[i] = static_cast<int>(m);
  }

  // Node reachability per strategy.
  reach_node_.assign(n, {});
  for (int j = 0; j < n; ++j) {
    reach_node_[j].assign(NumStrategies(j), std::vector<char>(nodes, 0));
    for (int s = 0; s < NumStrategies(j); ++s) {
      auto& reach = reach_node_[j][s];
      const auto& ch = strategies_[j][s].choices;
      for (int x = 0; x < nodes; ++x) {
        const History& h = g_.history(x);
        if (h.parent < 0) {
          reach[x] = 1;
          continue;
        }
        if (!reach[h.parent]) continue;
        const History& p = g_.history(h.parent);
        bool ok = true;
        for (size_t k = 0; k < p.movers.size(); ++k) {
          if (p.movers[k].player != j) continue;
          auto it = ch.find(p.movers[k].info_set);
          ok = it != ch.end() && it->second == h.incoming[k];
        }
        reach[x] = ok ? 1 : 0;
      }
    }
  }

  // Outcome tensor.
  outcome_.assign(static_cast<size_t>(total), -1);
  std::vector<int> prof(n, 0);
  for (int64_t f = 0; f < total; ++f) {
    int64_t rem = f;
    for (int i = n - 1; i >= 0; --i) {
      prof[i] = static_cast<int>(rem % NumStrategies(i));
      rem /= NumStrategies(i);
    }
    int x = 0;
    std::vector<int> joint;
    while (g_.history(x).terminal < 0) {
      const History& h = g_.history(x);
      joint.assign(h.movers.size(), 0);
      for (size_t k = 0; k < h.movers.size(); ++k) {
        const auto& ch = strategies_[h.movers[k].player][prof[h.movers[k].player]].choices;
        joint[k] = ch.at(h.movers[k].info_set);
      }
      x = g_.Child(x, joint);
    }
    outcome_[f] = g_.history(x).terminal;
  }

  // Information-set reachability.
  const int ninfo = static_cast<int>(g_.info_sets().size());
  reach_info_.assign(ninfo, {});
  for (int h = 0; h < ninfo; ++h) {
    reach_info_[h].resize(n);
    for (int j = 0; j < n; ++j) {
      reach_info_[h][j].assign(NumStrategies(j), 0);
      for (int s = 0; s < NumStrategies(j); ++s) {
        for (int x : g_.info_set(h).members) {
          if (reach_node_[j][s][x]) {
            reach_info_[h][j][s] = 1;
            break;
          }
        }
      }
    }
  }
  opp_reach_.assign(ninfo, {});
  opp_reach_mask_.assign(ninfo, {});
  for (int h = 0; h < ninfo; ++h) {
    const int i = g_.info_set(h).owner;
    opp_reach_mask_[h].assign(num_opp_[i], 0);
    for (int y = 0; y < num_opp_[i]; ++y) {
      std::vector<int> op = OppProfile(i, y);
      for (int x : g_.info_set(h).members) {
        bool all = true;
        for (int j = 0; j < n && all; ++j) {
          if (j != i && !reach_node_[j][op[j]][x]) all = false;
        }
        if (all) {
          opp_reach_mask_[h][y] = 1;
          opp_reach_[h].push_back(y);
          break;
        }
      }
    }
  }

  follows_.assign(ninfo, std::vector<char>(ninfo, 0));
  for (int h = 0; h < ninfo; ++h) {
    for (int h2 = 0; h2 < ninfo; ++h2) {
      bool f = false;
      for (int a : g_.info_set(h).members) {
        for (int b : g_.info_set(h2).members) {
          if (g_.IsPredecessor(a, b)) f = true;
        }
      }
      follows_[h][h2] = f ? 1 : 0;
    }
  }
}

void StrategySpace::Enumerate(int i, int64_t limit) {
  const std::vector<int>& own = g_.OwnInfoSets(i);
  std::map<int, int> assign;
  // Whether some member of h is reached given the partial plan.
  auto reachable = [&](int h) {
    for (int x : g_.info_set(h).members) {
      bool ok = true;
      for (int y = x; g_.history(y).parent >= 0 && ok; y = g_.history(y).parent) {
        const History& p = g_.history(g_.history(y).parent);
        for (size_t k = 0; k < p.movers.size(); ++k) {
          if (p.movers[k].player != i) continue;
          auto it = assign.find(p.movers[k].info_set);
          if (it == assign.end() || it->second != g_.history(y).incoming[k]) ok = false;
        }
      }
      if (ok) return true;
    }
    return false;
  };
  bool single_char = true;
  for (int h : own) {
    for (const auto& a : g_.info_set(h).actions) {
      if (a.size() != 1) single_char = false;
    }
  }
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == own.size()) {
      ReducedStrategy s;
      s.owner = i;
      s.choices = assign;
      std::string name;
      for (const auto& [h, a] : assign) {
        if (!single_char && !name.empty()) name += ".";
        name += g_.info_set(h).actions[a];
      }
      if (name.empty()) name = "-";
      if (static_cast<int64_t>(strategies_[i].size()) >= limit) {
        Fail(ErrorCode::kSizeCap, "player " + g_.PlayerName(i) + " alone exceeds the profile cap");
      }
      index_of_[i][assign] = static_cast<int>(strategies_[i].size());
      strategies_[i].push_back(std::move(s));
      names_[i].push_back(name);
      return;
    }
    int h = own[k];
    if (!reachable(h)) {
      rec(k + 1);
      return;
    }
    for (int a = 0; a < static_cast<int>(g_.info_set(h).actions.size()); ++a) {
      assign[h] = a;
      rec(k + 1);
      assign.erase(h);
    }
  };
  rec(0);
}

int StrategySpace::Find(int i, const std::string& name) const {
  for (int s = 0; s < NumStrategies(i); ++s) {
    if (names_[i][s] == name) return s;
  }
  return -1;
}

int StrategySpace::IndexOf(const ReducedStrategy& s) const {
  if (s.owner < 0 || s.owner >= NumPlayers()) return -1;
  auto it = index_of_[s.owner].find(s.choices);
  return it == index_of_[s.owner].end() ? -1 : it->second;
}

int64_t StrategySpace::Flat(const std::vector<int>& profile) const {
  int64_t f = 0;
  for (int i = 0; i < NumPlayers(); ++i) f += stride_[i] * profile[i];
  return f;
}

std::vector<int> StrategySpace::Unflatten(int64_t flat) const {
  std::vector<int> p(NumPlayers());
  for (int i = 0; i < NumPlayers(); ++i) {
    p[i] = static_cast<int>(flat / stride_[i]);
    flat %= stride_[i];
  }
  return p;
}

int StrategySpace::OppComponent(int i, int opp, int j) const {
  return static_cast<int>((opp / opp_stride_[i][j]) % NumStrategies(j));
}

std::vector<int> StrategySpace::OppProfile(int i, int opp) const {
  std::vector<int> p(NumPlayers(), -1);
  for (int j = 0; j < NumPlayers(); ++j) {
    if (j != i) p[j] = OppComponent(i, opp, j);
  }
  return p;
}

int StrategySpace::OppIndex(int i, const std::vector<int>& profile) const {
  int64_t y = 0;
  for (int j = 0; j < NumPlayers(); ++j) {
    if (j != i) y += opp_stride_[i][j] * profile[j];
  }
  return static_cast<int>(y);
}

int64_t StrategySpace::FlatWith(int i, int s, int opp) const {
  int64_t f = stride_[i] * s;
  for (int j = 0; j < NumPlayers(); ++j) {
    if (j != i) f += stride_[j] * OppComponent(i, opp, j);
  }
  return f;
}

std::vector<int> StrategySpace::AllowedInfoSets(int i, int s) const {
  std::vector<int> out;
  for (int h = 0; h < static_cast<int>(g_.info_sets().size()); ++h) {
    if (Reaches(i, s, h)) out.push_back(h);
  }
  return out;
}

std::vector<int> StrategySpace::OwnAllowedInfoSets(int i, int s) const {
  std::vector<int> out;
  for (int h : g_.OwnInfoSets(i)) {
    if (Reaches(i, s, h)) out.push_back(h);
  }
  return out;
}

Restriction StrategySpace::Full() const {
  Restriction r;
  for (int i = 0; i < NumPlayers(); ++i) {
    std::vector<int> v(NumStrategies(i));
    for (int s = 0; s < NumStrategies(i); ++s) v[s] = s;
    r.sets.push_back(v);
  }
  return r;
}

StrategicForm StrategySpace::ToStrategicForm() const {
  StrategicForm sf;
  for (int i = 0; i < NumPlayers(); ++i) {
    sf.players.push_back(g_.PlayerName(i));
    sf.strategy_names.push_back(names_[i]);
    std::vector<int> rank(g_.NumTerminals());
    for (int z = 0; z < g_.NumTerminals(); ++z) rank[z] = g_.Rank(i, z);
    sf.rank.push_back(rank);
  }
  for (int z = 0; z < g_.NumTerminals(); ++z) sf.outcome_labels.push_back(g_.TerminalLabel(z));
  sf.outcome = outcome_;
  return sf;
}

int OutcomeOfPlans(const DynamicGame& g, const std::vector<ReducedStrategy>& plans) {
  if (static_cast<int>(plans.size()) != g.NumPlayers()) {
    Fail(ErrorCode::kIncompleteProfile, "profile has " + std::to_string(plans.size()) +
                                            " entries for " + std::to_string(g.NumPlayers()) +
                                            " players");
  }
  for (int i = 0; i < g.NumPlayers(); ++i) {
    if (plans[i].owner != i) {
      Fail(ErrorCode::kIncompleteProfile, "entry " + std::to_string(i) + " belongs to another player");
    }
  }
  int x = 0;
  while (g.history(x).terminal < 0) {
    const History& h = g.history(x);
    std::vector<int> joint(h.movers.size());
    for (size_t k = 0; k < h.movers.size(); ++k) {
      const auto& ch = plans[h.movers[k].player].choices;
      auto it = ch.find(h.movers[k].info_set);
      if (it == ch.end()) {
        Fail(ErrorCode::kIncompleteProfile,
             "no choice at information set '" + g.info_set(h.movers[k].info_set).label + "'");
      }
      joint[k] = it->second;
    }
    x = g.Child(x, joint);
  }
  return g.history(x).terminal;
}

bool OppInRestriction(const StrategySpace& sp, int i, int opp, const Restriction& r) {
  for (int j = 0; j < sp.NumPlayers(); ++j) {
    if (j != i && !r.Contains(j, sp.OppComponent(i, opp, j))) return false;
  }
  return true;
}

ConditionalProblem ReachingSets(const StrategySpace& sp, int h, const Restriction& r) {
  ConditionalProblem p;
  p.info_set = h;
  p.owner = sp.game().info_set(h).owner;
  for (int s : r.sets[p.owner]) {
    if (sp.Reaches(p.owner, s, h)) p.own.push_back(s);
  }
  for (int y : sp.OppReach(h)) {
    if (OppInRestriction(sp, p.owner, y, r)) p.opp.push_back(y);
  }
  return p;
}

std::vector<int> RestrictedOpp(const StrategySpace& sp, int i, const Restriction& r) {
  // Enumerate the product directly, in increasing index order.
  std::vector<int> out = {0};
  for (int j = 0; j < sp.NumPlayers(); ++j) {
    if (j == i) continue;
    std::vector<int> next;
    int64_t stride = 1;
    for (int k = j + 1; k < sp.NumPlayers(); ++k) {
      if (k != i) stride *= sp.NumStrategies(k);
    }
    for (int base : out) {
      for (int s : r.sets[j]) next.push_back(base + static_cast<int>(stride * s));
    }
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> OutcomesOf(const StrategySpace& sp, const Restriction& r) {
  std::set<int> zs;
  std::vector<int> prof(sp.NumPlayers());
  std::function<void(int)> rec = [&](int j) {
    if (j == sp.NumPlayers()) {
      zs.insert(sp.Outcome(prof));
      return;
    }
    for (int s : r.sets[j]) {
      prof[j] = s;
      rec(j + 1);
    }
  };
  rec(0);
  return std::vector<int>(zs.begin(), zs.end());
}

std::string ProfileName(const StrategySpace& sp, const std::vector<int>& profile) {
  std::string out = "(";
  for (int i = 0; i < sp.NumPlayers(); ++i) {
    if (i) out += ", ";
    out += sp.Name(i, profile[i]);
  }
  return out + ")";
}

}  // namespace icbd
