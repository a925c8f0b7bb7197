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

#include "icbd/applications.h"

#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "icbd/errors.h"
#include "icbd/strategies.h"
#include "test_util.h"

namespace icbd {
namespace {

using testing::CodeOf;

const std::vector<std::vector<int>> kCyclic = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

TEST_CASE("majority relation of a Condorcet cycle") {
  const BinaryAgenda a = testing::Amendment(kCyclic);
  const auto beats = MajorityRelation(a);
  CHECK(beats[0][1]);
  CHECK(beats[1][2]);
  CHECK(beats[2][0]);
  CHECK_FALSE(beats[1][0]);
  CHECK_FALSE(beats[0][0]);
  CHECK(SophisticatedOutcome(a) == 1);
}

TEST_CASE("unanimous voters get their favourite") {
  for (int top = 0; top < 3; ++top) {
    std::vector<int> pref = {top};
    for (int k = 0; k < 3; ++k) {
      if (k != top) pref.push_back(k);
    }
    const BinaryAgenda a = testing::Amendment({pref, pref, pref});
    CHECK(SophisticatedOutcome(a) == top);
    const AgendaReport rep = AnalyzeAgenda(a);
    CHECK(rep.bi_alternatives == std::vector<int>{top});
  }
}

TEST_CASE("agenda validation") {
  CHECK(CodeOf([] { ValidateAgenda(testing::Amendment({{0, 1, 2}, {1, 0, 2}})); }) ==
        ErrorCode::kEvenVoterCount);
  CHECK(CodeOf([] { ValidateAgenda(testing::Amendment({{0, 0, 2}})); }) ==
        ErrorCode::kIndifferenceFound);
  BinaryAgenda bad = testing::Amendment({{0, 1, 2}});
  bad.nodes[3].alternatives = {0, 1};
  CHECK(CodeOf([&] { ValidateAgenda(bad); }) == ErrorCode::kInvalidAgenda);
  BinaryAgenda wrong_split = testing::Amendment({{0, 1, 2}});
  wrong_split.nodes[1].alternatives = {0, 1};
  CHECK(CodeOf([&] { ValidateAgenda(wrong_split); }) == ErrorCode::kInvalidAgenda);
  CHECK(CodeOf([] { ValidateAgenda(testing::Amendment(kCyclic)); }) == testing::kNoError);
}

TEST_CASE("agenda games are perfect-information public votes") {
  BinaryAgenda a;
  a.alternatives = {"x", "y"};
  a.voters = {"v1", "v2", "v3"};
  a.prefs = {{0, 1}, {1, 0}, {1, 0}};
  a.nodes = {{{0, 1}, 1, 2}, {{0}, -1, -1}, {{1}, -1, -1}};
  const AgendaGame ag = AgendaToGame(a);
  CHECK(ag.game.NumTerminals() == 8);
  CHECK(ClassifyGame(ag.game).perfect_information);
  int x_count = 0;
  for (int z = 0; z < ag.game.NumTerminals(); ++z) x_count += ag.alternative_of_terminal[z] == 0;
  CHECK(x_count == 4);
  const AgendaReport rep = AnalyzeAgenda(a);
  CHECK(rep.sophisticated == 1);
  CHECK(rep.bi_alternatives == std::vector<int>{1});
  CHECK(rep.tdi);
  REQUIRE(rep.icbd_alternative.has_value());
  CHECK(*rep.icbd_alternative == 1);

  BinaryAgenda single;
  single.alternatives = {"x"};
  single.voters = {"v1"};
  single.prefs = {{0}};
  single.nodes = {{{0}, -1, -1}};
  const AgendaGame sg = AgendaToGame(single);
  CHECK(sg.game.NumTerminals() == 1);
  CHECK(SophisticatedOutcome(single) == 0);
}

TEST_CASE("agenda shapes over three alternatives") {
  const auto shapes = AllAgendaShapes(3);
  CHECK(shapes.size() == 6);
  for (const BinaryAgenda& shape : shapes) {
    CHECK(CodeOf([&] { ValidateAgenda(shape); }) == testing::kNoError);
    BinaryAgenda a = shape;
    a.prefs = {{2, 0, 1}};
    const AgendaReport rep = AnalyzeAgenda(a);
    CHECK(rep.sophisticated == 2);
    CHECK(rep.bi_alternatives == std::vector<int>{2});
    CHECK(rep.tdi);
    REQUIRE(rep.icbd_alternative.has_value());
    CHECK(*rep.icbd_alternative == 2);
  }
  CHECK(AllAgendaShapes(1).size() == 1);
  CHECK(AllAgendaShapes(2).size() == 1);
}

TEST_CASE("three voters exceed the strategy-space cap") {
  const AgendaReport rep = AnalyzeAgenda(testing::Amendment(kCyclic));
  CHECK(rep.sophisticated == 1);
  CHECK(rep.bi_alternatives == std::vector<int>{1});
  CHECK(rep.tdi);
  CHECK_FALSE(rep.icbd_alternative.has_value());
  CHECK(rep.icbd_status.find("cap") != std::string::npos);
}

TEST_CASE("money-burning base game quantities") {
  const MoneyBurnBaseGame base = testing::BosBase();
  CHECK(CodeOf([&] { ValidateBase(base); }) == testing::kNoError);
  CHECK(DeltaGap(base) == 1);
  CHECK(Spread(base) == 3);
  CHECK(DefaultBudgetCap(base, Rational(1, 2)) == 7);
  MoneyBurnBaseGame tied = base;
  tied.v_a[1][1] = 3;
  CHECK(CodeOf([&] { ValidateBase(tied); }) == ErrorCode::kPreconditionViolated);
  MoneyBurnBaseGame no_reply = base;
  no_reply.v_b[0][1] = 1;
  CHECK(CodeOf([&] { ValidateBase(no_reply); }) == ErrorCode::kPreconditionViolated);
  CHECK(CodeOf([&] { MoneyBurnGame(base, MoneyBurnConfig{1, 1}); }) ==
        ErrorCode::kEpsilonTooLarge);
}

TEST_CASE("money-burning game structure") {
  const DynamicGame g = MoneyBurnGame(testing::BosBase(), MoneyBurnConfig{Rational(1, 2), 1});
  const StrategySpace sp(g);
  CHECK(sp.NumStrategies(0) == 4);
  CHECK(sp.NumStrategies(1) == 4);
  CHECK(g.NumTerminals() == 8);
  CHECK(g.TerminalByLabel("1:T:L") >= 0);
}

TEST_CASE("money burning selects the star outcome without burning") {
  const MoneyBurnReport rep = MoneyBurnSolve(testing::BosBase(), MoneyBurnConfig{Rational(1, 2), 3});
  CHECK(rep.outcome_matches);
  CHECK(rep.claim_failures.empty());
  REQUIRE(rep.result.outcomes.size() == 1);
  CHECK(rep.result.outcomes[0] == rep.predicted_terminal);
}

TEST_CASE("random money-burning bases") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const MoneyBurnBaseGame base = RandomMoneyBurnBase(seed);
    CHECK(CodeOf([&] { ValidateBase(base); }) == testing::kNoError);
    const MoneyBurnBaseGame again = RandomMoneyBurnBase(seed);
    CHECK(base.v_a == again.v_a);
    CHECK(base.v_b == again.v_b);
  }
}

}  // namespace
}  // namespace icbd
