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

#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "icbd/errors.h"
#include "test_util.h"

namespace icbd {
namespace {

using testing::CodeOf;

RawGame TwoStage() {
  RawGame raw;
  raw.players = {"Ann", "Bob"};
  raw.root = "r";
  raw.nodes = {{"r", {{"Ann", "a0", {"L", "R"}}}, {"x", "y"}, ""},
               {"x", {{"Bob", "b0", {"l", "r"}}}, {"z1", "z2"}, ""},
               {"y", {}, {}, "z3"},
               {"z1", {}, {}, "z1"},
               {"z2", {}, {}, "z2"}};
  raw.preferences = {{{"z1"}, {"z2", "z3"}}, {{"z3"}, {"z2"}, {"z1"}}};
  return raw;
}

TEST_CASE("fixture games validate and classify") {
  const DynamicGame bos = testing::BosOutside();
  CHECK(bos.NumPlayers() == 2);
  CHECK(bos.NumTerminals() == 5);
  CHECK(bos.info_sets().size() == 3);
  const GameClass c = ClassifyGame(bos);
  CHECK(c.observable_actions);
  CHECK_FALSE(c.perfect_information);
  const GameClass cc = ClassifyGame(testing::RenyCentipede());
  CHECK(cc.perfect_information);
  CHECK(cc.observable_actions);
}

TEST_CASE("ranks are dense with 0 best") {
  const DynamicGame g = testing::BosOutside();
  const int ann = g.PlayerIndex("Ann");
  CHECK(g.Rank(ann, g.TerminalByLabel("z2")) == 0);
  CHECK(g.Rank(ann, g.TerminalByLabel("z1")) == 1);
  CHECK(g.Rank(ann, g.TerminalByLabel("z5")) == 2);
  CHECK(g.Rank(ann, g.TerminalByLabel("z3")) == 3);
  CHECK(g.Indifferent(ann, g.TerminalByLabel("z3"), g.TerminalByLabel("z4")));
  CHECK(g.MaxRank(ann) == 3);
  CHECK(g.Prefers(ann, g.TerminalByLabel("z2"), g.TerminalByLabel("z1")));
}

TEST_CASE("histories are stored in preorder") {
  const DynamicGame g = testing::RenyCentipede();
  for (const History& h : g.histories()) {
    for (int c : h.children) {
      CHECK(c > h.id);
      CHECK(g.history(c).parent == h.id);
      CHECK(g.IsPredecessor(h.id, c));
    }
  }
}

TEST_CASE("last common predecessor") {
  const DynamicGame g = testing::RenyCentipede();
  const int z3 = g.TerminalByLabel("z3");
  const int z5 = g.TerminalByLabel("z5");
  const int z1 = g.TerminalByLabel("z1");
  const int x = LastCommonPredecessor(g, z3, z5);
  CHECK(g.history(x).movers.size() == 1);
  CHECK(g.info_set(g.history(x).movers[0].info_set).label == "a.BD");
  CHECK(LastCommonPredecessor(g, z1, z5) == g.root());
  CHECK(CodeOf([&] { LastCommonPredecessor(g, z1, z1); }) == ErrorCode::kSameHistory);
}

TEST_CASE("validation errors") {
  CHECK_NOTHROW(ValidateGame(TwoStage()));
  {
    RawGame raw = TwoStage();
    raw.nodes[1].children = {"z1", "nowhere"};
    CHECK(CodeOf([&] { ValidateGame(raw); }) == ErrorCode::kDanglingHistory);
  }
  {
    RawGame raw = TwoStage();
    raw.nodes[1].children = {"z1", "r"};
    CHECK(CodeOf([&] { ValidateGame(raw); }) == ErrorCode::kCycleInTree);
  }
  {
    RawGame raw = TwoStage();
    raw.preferences[0] = {{"z1"}, {"z2"}};
    CHECK(CodeOf([&] { ValidateGame(raw); }) == ErrorCode::kPreferenceDomainMismatch);
  }
  {
    RawGame raw = TwoStage();
    raw.nodes[1].moves[0].actions = {"l", "l"};
    CHECK(CodeOf([&] { ValidateGame(raw); }) == ErrorCode::kInfoSetActionMismatch);
  }
  {
    // The same information set with two different action lists.
    RawGame raw;
    raw.players = {"Ann", "Bob"};
    raw.root = "r";
    raw.nodes = {{"r", {{"Ann", "a0", {"L", "R"}}}, {"x", "y"}, ""},
                 {"x", {{"Bob", "b0", {"l", "r"}}}, {"z1", "z2"}, ""},
                 {"y", {{"Bob", "b0", {"l", "m"}}}, {"z3", "z4"}, ""},
                 {"z1", {}, {}, "z1"},
                 {"z2", {}, {}, "z2"},
                 {"z3", {}, {}, "z3"},
                 {"z4", {}, {}, "z4"}};
    raw.preferences = {{{"z1", "z2", "z3", "z4"}}, {{"z1", "z2", "z3", "z4"}}};
    CHECK(CodeOf([&] { ValidateGame(raw); }) == ErrorCode::kInfoSetActionMismatch);
    // Same actions: Bob does not observe Ann's move, which is fine.
    raw.nodes[2].moves[0].actions = {"l", "r"};
    CHECK_NOTHROW(ValidateGame(raw));
  }
  {
    // Ann forgets her own first move.
    RawGame raw;
    raw.players = {"Ann"};
    raw.root = "r";
    raw.nodes = {{"r", {{"Ann", "a0", {"L", "R"}}}, {"x", "y"}, ""},
                 {"x", {{"Ann", "a1", {"l", "r"}}}, {"z1", "z2"}, ""},
                 {"y", {{"Ann", "a1", {"l", "r"}}}, {"z3", "z4"}, ""},
                 {"z1", {}, {}, "z1"},
                 {"z2", {}, {}, "z2"},
                 {"z3", {}, {}, "z3"},
                 {"z4", {}, {}, "z4"}};
    raw.preferences = {{{"z1"}, {"z2"}, {"z3"}, {"z4"}}};
    CHECK(CodeOf([&] { ValidateGame(raw); }) == ErrorCode::kPerfectRecallViolation);
  }
  {
    RawGame raw = TwoStage();
    raw.players.clear();
    CHECK(CodeOf([&] { ValidateGame(raw); }) == ErrorCode::kSchemaError);
  }
}

TEST_CASE("child lookup by joint action") {
  const DynamicGame g = testing::BosOutside();
  const int inner = g.history(g.root()).children[1];
  const int z = g.history(g.Child(inner, {0, 1})).terminal;
  CHECK(g.TerminalLabel(z) == "z3");
  CHECK(g.IncomingAction(g.Child(inner, {1, 0}), g.PlayerIndex("Bob")) == 0);
}

TEST_CASE("generated games are valid and classify as flagged") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const DynamicGame g = testing::SmallGame(seed, 3, 3, 3, seed % 2 == 0);
    if (seed % 2 == 0) CHECK(ClassifyGame(g).perfect_information);
    std::set<std::string> labels;
    for (int z = 0; z < g.NumTerminals(); ++z) labels.insert(g.TerminalLabel(z));
    CHECK(static_cast<int>(labels.size()) == g.NumTerminals());
  }
}

}  // namespace
}  // namespace icbd
