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

#ifndef ICBD_TESTS_FIXTURES_H_
#define ICBD_TESTS_FIXTURES_H_

#include <map>
#include <string>
#include <vector>

#include "icbd/applications.h"
#include "icbd/cardinal.h"
#include "icbd/game.h"
#include "icbd/rational.h"

namespace icbd {
namespace testing {

inline void SetPayoffs(GameBuilder& b, const std::vector<std::string>& players,
                       const std::map<std::string, std::vector<int>>& pay) {
  for (size_t i = 0; i < players.size(); ++i) {
    std::map<std::string, Rational> m;
    for (const auto& [z, v] : pay) m[z] = v[i];
    b.Payoffs(players[i], m);
  }
}

// Battle of the Sexes with an outside option for Ann.
inline DynamicGame BosOutside() {
  GameBuilder b({"Ann", "Bob"});
  const int z1 = b.Terminal("z1");
  std::vector<int> leaves = {b.Terminal("z2"), b.Terminal("z3"), b.Terminal("z4"),
                             b.Terminal("z5")};
  const int inner = b.Decision({RawMove{"Ann", "a.I", {"T", "D"}}, RawMove{"Bob", "b.I", {"L", "R"}}},
                               leaves);
  const int root = b.Decision("Ann", "a.root", {"O", "I"}, {z1, inner});
  SetPayoffs(b, {"Ann", "Bob"},
             {{"z1", {2, 2}}, {"z2", {3, 1}}, {"z3", {0, 0}}, {"z4", {0, 0}}, {"z5", {1, 3}}});
  return b.Build(root);
}

// Four-stage centipede: Ann A/B, Bob C/D, Ann E/F, Bob G/H.
inline DynamicGame RenyCentipede() {
  GameBuilder b({"Ann", "Bob"});
  const int z5 = b.Terminal("z5");
  const int z4 = b.Terminal("z4");
  const int h4 = b.Decision("Bob", "b.BDF", {"G", "H"}, {z4, z5});
  const int z3 = b.Terminal("z3");
  const int h3 = b.Decision("Ann", "a.BD", {"E", "F"}, {z3, h4});
  const int z2 = b.Terminal("z2");
  const int h2 = b.Decision("Bob", "b.B", {"C", "D"}, {z2, h3});
  const int z1 = b.Terminal("z1");
  const int root = b.Decision("Ann", "a.root", {"A", "B"}, {z1, h2});
  SetPayoffs(b, {"Ann", "Bob"},
             {{"z1", {3, 0}}, {"z2", {1, 2}}, {"z3", {2, 1}}, {"z4", {0, 3}}, {"z5", {4, 0}}});
  return b.Build(root);
}

// ICBD and the local-first reduction disagree on this game.
inline DynamicGame OrderDependence() {
  GameBuilder b({"Ann", "Bob"});
  const int z1 = b.Terminal("z1");
  std::vector<int> leaves;
  for (int k = 2; k <= 7; ++k) leaves.push_back(b.Terminal("z" + std::to_string(k)));
  const int inner = b.Decision(
      {RawMove{"Ann", "a.I", {"T", "D"}}, RawMove{"Bob", "b.I", {"L", "C", "R"}}}, leaves);
  const int root = b.Decision("Ann", "a.root", {"O", "I"}, {z1, inner});
  SetPayoffs(b, {"Ann", "Bob"},
             {{"z1", {3, 0}},
              {"z2", {2, 2}},
              {"z3", {2, 1}},
              {"z4", {0, 0}},
              {"z5", {1, 1}},
              {"z6", {1, 2}},
              {"z7", {4, 0}}});
  return b.Build(root);
}

inline std::map<std::string, std::vector<int>> DynamicOutsidePayoffs() {
  return {{"z1", {0, 0}}, {"z2", {3, 2}}, {"z3", {0, 1}}, {"z4", {0, 1}},
          {"z5", {3, 0}}, {"z6", {1, 0}}, {"z7", {1, 1}}};
}

// Bernoulli utilities read off numeric payoffs keyed by outcome label.
inline std::vector<UtilityFunction> PayoffUtilities(
    const DynamicGame& g, const std::map<std::string, std::vector<int>>& pay) {
  std::vector<UtilityFunction> out(g.NumPlayers());
  for (int i = 0; i < g.NumPlayers(); ++i) {
    out[i].owner = i;
    out[i].values.resize(g.NumTerminals());
    for (int z = 0; z < g.NumTerminals(); ++z) out[i].values[z] = pay.at(g.TerminalLabel(z))[i];
  }
  return out;
}

// Outside option followed by a T/M/D versus L/R stage: ordinal and cardinal
// reductions differ.
inline DynamicGame DynamicOutside() {
  GameBuilder b({"Ann", "Bob"});
  const int z1 = b.Terminal("z1");
  std::vector<int> leaves;
  for (int k = 2; k <= 7; ++k) leaves.push_back(b.Terminal("z" + std::to_string(k)));
  const int inner = b.Decision(
      {RawMove{"Ann", "a.I", {"T", "M", "D"}}, RawMove{"Bob", "b.I", {"L", "R"}}}, leaves);
  const int root = b.Decision("Ann", "a.root", {"O", "I"}, {z1, inner});
  SetPayoffs(b, {"Ann", "Bob"}, DynamicOutsidePayoffs());
  return b.Build(root);
}

// Base game for money burning: v_a = [[3,0],[1,2]], v_b = [[1,0],[0,3]].
inline MoneyBurnBaseGame BosBase() {
  MoneyBurnBaseGame base;
  base.actions_a = {"T", "D"};
  base.actions_b = {"L", "R"};
  base.v_a = {{3, 0}, {1, 2}};
  base.v_b = {{1, 0}, {0, 3}};
  base.star_a = 0;
  base.star_b = 0;
  return base;
}

// Two-split amendment agenda over {x, y, z}: x against y, winner against z.
inline BinaryAgenda Amendment(const std::vector<std::vector<int>>& prefs) {
  BinaryAgenda a;
  a.alternatives = {"x", "y", "z"};
  for (size_t v = 0; v < prefs.size(); ++v) a.voters.push_back("v" + std::to_string(v + 1));
  a.prefs = prefs;
  // 0 root {x,y,z}; 1 {x,z}; 2 {y,z}; leaves 3 x, 4 z, 5 y, 6 z.
  a.nodes = {{{0, 1, 2}, 1, 2}, {{0, 2}, 3, 4}, {{1, 2}, 5, 6},
             {{0}, -1, -1},     {{2}, -1, -1},  {{1}, -1, -1},
             {{2}, -1, -1}};
  a.root = 0;
  return a;
}

}  // namespace testing
}  // namespace icbd

#endif  // ICBD_TESTS_FIXTURES_H_
