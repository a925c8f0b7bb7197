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

#include <map>
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
using testing::Names;

// Reduced strategies from the definition: project every full assignment onto
// the information sets it does not preclude.
std::set<std::map<int, int>> BruteReduced(const DynamicGame& g, int i) {
  const std::vector<int>& own = g.OwnInfoSets(i);
  std::set<std::map<int, int>> out;
  std::vector<int> digit(own.size(), 0);
  while (true) {
    std::map<int, int> full;
    for (size_t k = 0; k < own.size(); ++k) full[own[k]] = digit[k];
    auto reachable = [&](int x) {
      for (int y = x; g.history(y).parent >= 0; y = g.history(y).parent) {
        const int p = g.history(y).parent;
        for (size_t k = 0; k < g.history(p).movers.size(); ++k) {
          const Move& m = g.history(p).movers[k];
          if (m.player == i && full.at(m.info_set) != g.history(y).incoming[k]) return false;
        }
      }
      return true;
    };
    std::map<int, int> reduced;
    for (int h : own) {
      for (int x : g.info_set(h).members) {
        if (reachable(x)) {
          reduced[h] = full[h];
          break;
        }
      }
    }
    out.insert(reduced);
    size_t k = 0;
    for (; k < own.size(); ++k) {
      if (++digit[k] < static_cast<int>(g.info_set(own[k]).actions.size())) break;
      digit[k] = 0;
    }
    if (k == own.size()) break;
  }
  return out;
}

TEST_CASE("reduced strategies of the fixtures") {
  const StrategySpace bos(testing::BosOutside());
  CHECK(Names(bos, 0, {0, 1, 2}) == std::vector<std::string>{"O", "IT", "ID"});
  CHECK(bos.NumStrategies(1) == 2);
  CHECK(bos.NumProfiles() == 6);
  CHECK(bos.game().TerminalLabel(bos.Outcome({bos.Find(0, "O"), bos.Find(1, "R")})) == "z1");
  CHECK(bos.game().TerminalLabel(bos.Outcome({bos.Find(0, "ID"), bos.Find(1, "R")})) == "z5");

  const StrategySpace cent(testing::RenyCentipede());
  CHECK(Names(cent, 0, {0, 1, 2}) == std::vector<std::string>{"A", "BE", "BF"});
  CHECK(Names(cent, 1, {0, 1, 2}) == std::vector<std::string>{"C", "DG", "DH"});
}

TEST_CASE("reduced strategies match the definition on random games") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const DynamicGame g = testing::SmallGame(seed, 1 + seed % 3, 3, 3, seed % 2 == 1);
    const StrategySpace sp(g);
    for (int i = 0; i < g.NumPlayers(); ++i) {
      std::set<std::map<int, int>> mine;
      for (const auto& s : sp.Strategies(i)) mine.insert(s.choices);
      CHECK(mine == BruteReduced(g, i));
      CHECK(static_cast<int>(mine.size()) == sp.NumStrategies(i));
    }
  }
}

TEST_CASE("outcome tensor agrees with playing the plans") {
  for (uint64_t seed = 100; seed < 130; ++seed) {
    const DynamicGame g = testing::SmallGame(seed, 3, 2);
    const StrategySpace sp(g);
    for (int64_t f = 0; f < sp.NumProfiles(); ++f) {
      const std::vector<int> prof = sp.Unflatten(f);
      CHECK(sp.Flat(prof) == f);
      std::vector<ReducedStrategy> plans;
      for (int i = 0; i < sp.NumPlayers(); ++i) plans.push_back(sp.Strategy(i, prof[i]));
      CHECK(OutcomeOfPlans(g, plans) == sp.OutcomeFlat(f));
    }
  }
}

TEST_CASE("opponent indexing round trips") {
  const DynamicGame g = testing::SmallGame(7, 3, 2);
  const StrategySpace sp(g);
  for (int i = 0; i < sp.NumPlayers(); ++i) {
    for (int y = 0; y < sp.NumOpp(i); ++y) {
      std::vector<int> prof = sp.OppProfile(i, y);
      CHECK(prof[i] == -1);
      CHECK(sp.OppIndex(i, prof) == y);
      prof[i] = 0;
      CHECK(sp.FlatWith(i, 0, y) == sp.Flat(prof));
    }
  }
}

TEST_CASE("reach sets and conditional problems") {
  const StrategySpace sp(testing::BosOutside());
  const DynamicGame& g = sp.game();
  int inner = -1;
  for (int h : g.OwnInfoSets(0)) {
    if (g.info_set(h).label == "a.I") inner = h;
  }
  REQUIRE(inner >= 0);
  CHECK_FALSE(sp.Reaches(0, sp.Find(0, "O"), inner));
  CHECK(sp.Reaches(0, sp.Find(0, "IT"), inner));
  const ConditionalProblem p = ReachingSets(sp, inner, sp.Full());
  CHECK(Names(sp, 0, p.own) == std::vector<std::string>{"IT", "ID"});
  CHECK(p.opp.size() == 2);
  CHECK(sp.OwnAllowedInfoSets(0, sp.Find(0, "O")).size() == 1);
  CHECK(sp.OwnAllowedInfoSets(0, sp.Find(0, "IT")).size() == 2);
}

TEST_CASE("restriction helpers") {
  const StrategySpace sp(testing::BosOutside());
  Restriction r = sp.Full();
  CHECK(r.NumProfiles() == 6);
  Restriction q = r;
  q.sets[0] = {1};
  CHECK(q.IsSubsetOf(r));
  CHECK_FALSE(r.IsSubsetOf(q));
  q.sets[1].clear();
  CHECK(q.Empty());
  CHECK(OutcomesOf(sp, r).size() == 5);
}

TEST_CASE("strategic form mirrors the space") {
  const StrategySpace sp(testing::RenyCentipede());
  const StrategicForm sf = sp.ToStrategicForm();
  CHECK(sf.NumProfiles() == sp.NumProfiles());
  for (int64_t f = 0; f < sf.NumProfiles(); ++f) CHECK(sf.outcome[f] == sp.OutcomeFlat(f));
  CHECK(sf.strategy_names[1] == std::vector<std::string>{"C", "DG", "DH"});
}

TEST_CASE("profile cap") {
  const DynamicGame g = testing::RenyCentipede();
  CHECK(CodeOf([&] { StrategySpace sp(g, 4); }) == ErrorCode::kSizeCap);
}

}  // namespace
}  // namespace icbd
