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

#include "icbd/dominance.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.h"
#include "icbd/errors.h"
#include "test_util.h"

namespace icbd {
namespace {

using testing::Names;

RankMatrix RandomMatrix(std::mt19937_64& rng, int rows, int cols, int ranks) {
  RankMatrix m;
  m.rows = rows;
  m.cols = cols;
  for (int k = 0; k < rows * cols; ++k) m.r.push_back(static_cast<int>(rng() % ranks));
  return m;
}

int InfoSet(const DynamicGame& g, const std::string& label) {
  for (const auto& h : g.info_sets()) {
    if (h.label == label) return h.id;
  }
  return -1;
}

TEST_CASE("peeling agrees with the exhaustive definition") {
  std::mt19937_64 rng(11);
  int dominated = 0;
  for (int t = 0; t < 3000; ++t) {
    const int rows = 2 + static_cast<int>(rng() % 3);
    const int cols = 1 + static_cast<int>(rng() % 7);
    const RankMatrix m = RandomMatrix(rng, rows, cols, 1 + static_cast<int>(rng() % 4));
    for (int row = 0; row < rows; ++row) {
      const PeelResult p = PeelRow(m, row);
      const bool brute = BDominatedExhaustive(m, row);
      CHECK(p.dominated == brute);
      dominated += brute ? 1 : 0;
      if (!p.dominated) {
        // The reported column set is one on which the row is admissible.
        REQUIRE_FALSE(p.admissible_cols.empty());
        for (int other = 0; other < rows; ++other) {
          if (other != row) CHECK_FALSE(RowWeaklyDominates(m, other, row, p.admissible_cols));
        }
      }
    }
  }
  CHECK(dominated > 100);
}

TEST_CASE("strict dominance implies B-dominance implies inadmissibility") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const RankMatrix m = RandomMatrix(rng, 3, 4, 3);
    std::vector<int> all = {0, 1, 2, 3};
    for (int row = 0; row < 3; ++row) {
      bool strict = false, weak = false;
      for (int o = 0; o < 3; ++o) {
        if (o == row) continue;
        strict = strict || RowStrictlyDominates(m, o, row, all);
        weak = weak || RowWeaklyDominates(m, o, row, all);
      }
      const bool bd = BDominatedExhaustive(m, row);
      if (strict) CHECK(bd);
      if (bd) CHECK(weak);
    }
  }
}

TEST_CASE("product subsets are a subfamily of all subsets") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 1000; ++t) {
    // Two opponents with 2 strategies each: columns are (a, b) pairs.
    const RankMatrix m = RandomMatrix(rng, 3, 4, 3);
    const std::vector<std::vector<int>> comps = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (int row = 0; row < 3; ++row) {
      if (BDominatedExhaustive(m, row)) CHECK(BDominatedProductSubsets(m, row, comps));
    }
  }
}

TEST_CASE("ID is B-dominated at the root of the outside-option game") {
  const StrategySpace sp(testing::BosOutside());
  const DynamicGame& g = sp.game();
  const ConditionalProblem root = ReachingSets(sp, InfoSet(g, "a.root"), sp.Full());
  const BDominatedResult res = BDominatedSet(sp, 0, root);
  CHECK(Names(sp, 0, res.dominated) == std::vector<std::string>{"ID"});
  const BDominanceCertificate& c = res.certificates.at(sp.Find(0, "ID"));
  CHECK(VerifyCertificate(sp, c));
  // Every nonempty subset of opponent profiles has a recorded dominator.
  for (const auto& [q, d] : c.Expand()) {
    CHECK(d >= 0);
    CHECK(WeaklyDominates(sp, 0, d, sp.Find(0, "ID"), [&] {
      Restriction r = sp.Full();
      r.sets[1] = q;
      return r;
    }()));
  }
  // At the inner node nothing is B-dominated for Ann.
  const ConditionalProblem inner = ReachingSets(sp, InfoSet(g, "a.I"), sp.Full());
  CHECK(BDominatedSet(sp, 0, inner).dominated.empty());
}

TEST_CASE("certificates from random games verify and tampering is caught") {
  int checked = 0;
  for (uint64_t seed = 0; seed < 80; ++seed) {
    const StrategySpace sp(testing::SmallGame(seed, 2 + seed % 2, 3 - seed % 2));
    const Restriction r = sp.Full();
    for (int i = 0; i < sp.NumPlayers(); ++i) {
      for (int h : sp.game().OwnInfoSets(i)) {
        const ConditionalProblem p = ReachingSets(sp, h, r);
        if (!p.Nonempty()) continue;
        const BDominatedResult res = BDominatedSet(sp, i, p);
        for (const auto& [s, c] : res.certificates) {
          CHECK(VerifyCertificate(sp, c));
          ++checked;
          // Claiming the certificate for a survivor must fail.
          for (int t : p.own) {
            if (std::find(res.dominated.begin(), res.dominated.end(), t) != res.dominated.end()) {
              continue;
            }
            BDominanceCertificate bad = c;
            bad.strategy = t;
            CHECK_FALSE(VerifyCertificate(sp, bad));
          }
        }
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("U operator on the outside-option game") {
  const StrategySpace sp(testing::BosOutside());
  std::vector<UElimination> el;
  const Restriction u = UOperator(sp, sp.Full(), {}, &el);
  CHECK(Names(sp, 0, u.sets[0]) == std::vector<std::string>{"O", "IT"});
  CHECK(u.sets[1].size() == 2);
  REQUIRE(el.size() == 1);
  CHECK(sp.game().info_set(el[0].info_set).label == "a.root");
  // Non-monotonicity: without O, ID survives.
  Restriction q = sp.Full();
  q.sets[0] = {sp.Find(0, "IT"), sp.Find(0, "ID")};
  CHECK(UOperator(sp, q) == q);
}

TEST_CASE("admissible sets and weak dominance") {
  const StrategySpace sp(testing::RenyCentipede());
  const Restriction r = sp.Full();
  CHECK(Names(sp, 0, AdmissibleSet(sp, 0, r)) == std::vector<std::string>{"A", "BF"});
  CHECK(Names(sp, 1, AdmissibleSet(sp, 1, r)) == std::vector<std::string>{"C", "DG"});
  CHECK(StrictlyDominates(sp, 0, sp.Find(0, "A"), sp.Find(0, "BE"), r));
  CHECK_FALSE(WeaklyDominates(sp, 0, sp.Find(0, "A"), sp.Find(0, "BF"), r));
  Restriction q = r;
  q.sets[1] = {sp.Find(1, "C"), sp.Find(1, "DG")};
  CHECK(StrictlyDominates(sp, 0, sp.Find(0, "A"), sp.Find(0, "BF"), q));
}

TEST_CASE("conditional B-dominance reports the lowest information set") {
  const StrategySpace sp(testing::RenyCentipede());
  auto hit = ConditionallyBDominated(sp, 1, sp.Find(1, "DH"), sp.Full());
  REQUIRE(hit.has_value());
  CHECK(sp.game().info_set(hit->first).label == "b.B");
  CHECK_FALSE(ConditionallyBDominated(sp, 1, sp.Find(1, "DG"), sp.Full()).has_value());
}

TEST_CASE("maximal admissible subset") {
  std::mt19937_64 rng(3);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const StrategySpace sp(testing::SmallGame(seed));
    for (int h = 0; h < static_cast<int>(sp.game().info_sets().size()); ++h) {
      const int i = sp.game().info_set(h).owner;
      const ConditionalProblem p = ReachingSets(sp, h, sp.Full());
      if (!p.Nonempty()) continue;
      const BDominatedResult bd = BDominatedSet(sp, i, p);
      for (int s : p.own) {
        const std::vector<int> q = MaximalAdmissibleSubset(sp, i, s, p);
        const bool dominated =
            std::find(bd.dominated.begin(), bd.dominated.end(), s) != bd.dominated.end();
        CHECK(q.empty() == dominated);
        if (q.empty()) continue;
        Restriction r = sp.Full();
        for (int t : p.own) {
          if (t == s) continue;
          bool weak = true, strict = false;
          for (int y : q) {
            const int a = sp.game().Rank(i, sp.OutcomeOpp(i, t, y));
            const int b = sp.game().Rank(i, sp.OutcomeOpp(i, s, y));
            weak = weak && a <= b;
            strict = strict || a < b;
          }
          CHECK_FALSE((weak && strict));
        }
      }
    }
  }
}

TEST_CASE("weak dominance at an information set lifts to the whole restriction") {
  int lifted = 0;
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const StrategySpace sp(testing::SmallGame(seed, 2, 3, 3, true));
    const Restriction r = sp.Full();
    for (int h = 0; h < static_cast<int>(sp.game().info_sets().size()); ++h) {
      const int i = sp.game().info_set(h).owner;
      const ConditionalProblem p = ReachingSets(sp, h, r);
      if (!p.Nonempty()) continue;
      Restriction at_h = r;
      at_h.sets[i] = p.own;
      for (int s : p.own) {
        for (int t : p.own) {
          if (s == t) continue;
          bool weak = true, strict = false;
          for (int y : p.opp) {
            const int a = sp.game().Rank(i, sp.OutcomeOpp(i, t, y));
            const int b = sp.game().Rank(i, sp.OutcomeOpp(i, s, y));
            weak = weak && a <= b;
            strict = strict || a < b;
          }
          if (!(weak && strict)) continue;
          const DominanceWitness w = LiftWeakDominance(sp, i, h, r, s, t);
          CHECK(VerifyWitness(sp, w));
          CHECK(w.dominated == s);
          ++lifted;
        }
      }
    }
  }
  CHECK(lifted > 10);
}

}  // namespace
}  // namespace icbd
