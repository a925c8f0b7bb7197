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

#include "icbd/cardinal.h"

#include <algorithm>
#include <map>
#include <random>
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

int InfoSet(const DynamicGame& g, const std::string& label) {
  for (const auto& h : g.info_sets()) {
    if (h.label == label) return h.id;
  }
  return -1;
}

bool Contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

TEST_CASE("canonical utility originates the preference") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const DynamicGame g = testing::SmallGame(seed);
    for (int i = 0; i < g.NumPlayers(); ++i) {
      const UtilityFunction u = CanonicalUtility(g, i);
      CHECK(ValidateOrigination(g, u));
      for (int z = 0; z < g.NumTerminals(); ++z) CHECK(u(z) == g.MaxRank(i) - g.Rank(i, z));
    }
  }
  const DynamicGame g = testing::BosOutside();
  UtilityFunction u = CanonicalUtility(g, 0);
  std::swap(u.values[0], u.values[1]);
  CHECK_FALSE(ValidateOrigination(g, u));
  // Restricting the domain to tied outcomes hides the swap.
  const int z3 = g.TerminalByLabel("z3"), z4 = g.TerminalByLabel("z4");
  UtilityFunction v = CanonicalUtility(g, 0);
  v.values[z3] = 7;
  CHECK_FALSE(ValidateOrigination(g, v));
  CHECK(ValidateOrigination(g, v, {z3}));
  CHECK_FALSE(ValidateOrigination(g, v, {z3, z4}));
}

TEST_CASE("conditional probability systems") {
  const StrategySpace sp(testing::RenyCentipede());
  const DynamicGame& g = sp.game();
  const int hb = InfoSet(g, "b.B"), hbdf = InfoSet(g, "b.BDF");
  const int a = sp.Find(0, "A"), be = sp.Find(0, "BE"), bf = sp.Find(0, "BF");
  CHECK(ConditioningEvent(sp, 1, kWholeSpace).size() == 3);
  CHECK(ConditioningEvent(sp, 1, hb) == std::vector<int>{be, bf});
  CHECK(ConditioningEvent(sp, 1, hbdf) == std::vector<int>{bf});

  ConditionalProbabilitySystem mu;
  mu.owner = 1;
  mu.measures[kWholeSpace] = {{a, 1}};
  mu.measures[hb] = {{be, Rational(1, 2)}, {bf, Rational(1, 2)}};
  mu.measures[hbdf] = {{bf, 1}};
  CHECK(ValidateCps(sp, mu).empty());

  ConditionalProbabilitySystem chain = mu;
  chain.measures[kWholeSpace] = {{be, Rational(1, 2)}, {bf, Rational(1, 2)}};
  chain.measures[hb] = {{be, 1}};
  const auto v = ValidateCps(sp, chain);
  REQUIRE_FALSE(v.empty());
  bool a3 = false;
  for (const auto& x : v) a3 = a3 || x.axiom == "A3";
  CHECK(a3);

  ConditionalProbabilitySystem outside = mu;
  outside.measures[hbdf] = {{be, 1}};
  CHECK_FALSE(ValidateCps(sp, outside).empty());

  ConditionalProbabilitySystem heavy = mu;
  heavy.measures[hb] = {{be, 1}, {bf, 1}};
  CHECK_FALSE(ValidateCps(sp, heavy).empty());

  ConditionalProbabilitySystem foreign = mu;
  foreign.measures[InfoSet(g, "a.root")] = {{a, 1}};
  CHECK(CodeOf([&] { ValidateCps(sp, foreign); }) == ErrorCode::kUnknownConditioningEvent);
}

TEST_CASE("expected utility of a pure strategy") {
  const StrategySpace sp(testing::BosOutside());
  const UtilityFunction u = CanonicalUtility(sp.game(), 0);
  const Measure m = {{sp.Find(1, "L"), Rational(1, 4)}, {sp.Find(1, "R"), Rational(3, 4)}};
  // Canonical values: z2 3, z5 1, z3 z4 0.
  CHECK(ExpectedUtility(sp, 0, sp.Find(0, "IT"), m, u) == Rational(3, 4));
  CHECK(ExpectedUtility(sp, 0, sp.Find(0, "ID"), m, u) == Rational(3, 4));
}

TEST_CASE("mixed dominance in the dynamic outside-option game") {
  const DynamicGame g = testing::DynamicOutside();
  const StrategySpace sp(g);
  const auto u = testing::PayoffUtilities(g, testing::DynamicOutsidePayoffs());
  const int h = InfoSet(g, "a.I");
  const ConditionalProblem p = ReachingSets(sp, h, sp.Full());
  const int it = sp.Find(0, "IT"), im = sp.Find(0, "IM"), id = sp.Find(0, "ID");
  const auto mix = MixedStrictlyDominated(sp, 0, id, p, u[0]);
  REQUIRE(mix.has_value());
  Rational total = 0;
  for (const auto& [s, w] : mix->weights) total += w;
  CHECK(total == 1);
  const Rational alpha = mix->weights.count(it) ? mix->weights.at(it) : Rational(0);
  CHECK(alpha > Rational(1, 3));
  CHECK(alpha < Rational(2, 3));
  CHECK(mix->weights.count(id) == 0);
  CHECK_FALSE(MixedStrictlyDominated(sp, 0, it, p, u[0]).has_value());
  CHECK_FALSE(MixedStrictlyDominated(sp, 0, im, p, u[0]).has_value());
  // No pure strategy alone B-dominates ID.
  CHECK_FALSE(Contains(BDominatedSet(sp, 0, p).dominated, id));
}

// Exact set of alpha in [0, 1] with alpha a + (1 - alpha) b > c everywhere.
bool IntervalNonempty(const std::vector<Rational>& a, const std::vector<Rational>& b,
                      const std::vector<Rational>& c) {
  Rational lo = 0, hi = 1;
  bool lo_strict = false, hi_strict = false;
  for (size_t y = 0; y < a.size(); ++y) {
    const Rational d = a[y] - b[y];
    const Rational e = c[y] - b[y];
    if (d == 0) {
      if (e >= 0) return false;
    } else if (d > 0) {
      const Rational bound = e / d;
      if (bound >= lo) {
        lo_strict = true;
        lo = bound;
      }
    } else {
      const Rational bound = e / d;
      if (bound <= hi) {
        hi_strict = true;
        hi = bound;
      }
    }
  }
  return lo < hi || (lo == hi && !lo_strict && !hi_strict);
}

TEST_CASE("three-row mixed dominance matches the interval oracle") {
  std::mt19937_64 rng(77);
  int dominated = 0;
  for (int t = 0; t < 300; ++t) {
    const int cols = 1 + static_cast<int>(rng() % 4);
    GameBuilder b({"Ann", "Bob"});
    std::vector<int> leaves;
    std::vector<std::string> col_actions;
    for (int y = 0; y < cols; ++y) col_actions.push_back(std::string(1, static_cast<char>('a' + y)));
    std::map<std::string, std::vector<int>> pay;
    for (int k = 0; k < 3 * cols; ++k) {
      const std::string label = "z" + std::to_string(k);
      leaves.push_back(b.Terminal(label));
      pay[label] = {static_cast<int>(rng() % 5), 0};
    }
    const int root =
        b.Decision({RawMove{"Ann", "h", {"X", "Y", "Z"}}, RawMove{"Bob", "k", col_actions}}, leaves);
    testing::SetPayoffs(b, {"Ann", "Bob"}, pay);
    const DynamicGame g = b.Build(root);
    const StrategySpace sp(g);
    const auto u = testing::PayoffUtilities(g, pay);
    const ConditionalProblem p = ReachingSets(sp, InfoSet(g, "h"), sp.Full());
    auto row = [&](int s) {
      std::vector<Rational> out;
      for (int y : p.opp) out.push_back(u[0](sp.OutcomeOpp(0, s, y)));
      return out;
    };
    for (int s = 0; s < 3; ++s) {
      const int t1 = (s + 1) % 3, t2 = (s + 2) % 3;
      const bool oracle = IntervalNonempty(row(t1), row(t2), row(s));
      const auto mix = MixedStrictlyDominated(sp, 0, s, p, u[0]);
      CHECK(mix.has_value() == oracle);
      dominated += oracle ? 1 : 0;
      if (mix) {
        for (int y : p.opp) {
          Rational eu = 0;
          for (const auto& [x, w] : mix->weights) eu += w * u[0](sp.OutcomeOpp(0, x, y));
          CHECK(eu > u[0](sp.OutcomeOpp(0, s, y)));
        }
      }
      // A strategy that is never strictly dominated by a mixture is a best reply.
      const auto belief = BestReplyBelief(sp, 0, s, p, u[0]);
      CHECK(belief.has_value() != mix.has_value());
      if (belief) {
        for (int x : p.own) {
          CHECK(ExpectedUtility(sp, 0, s, *belief, u[0]) >=
                ExpectedUtility(sp, 0, x, *belief, u[0]));
        }
      }
    }
  }
  CHECK(dominated > 30);
}

TEST_CASE("mixed reduction is contained in the ordinal reduction") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const DynamicGame g = testing::SmallGame(seed);
    const StrategySpace sp(g);
    if (sp.NumProfiles() > 400) continue;
    std::vector<UtilityFunction> u;
    for (int i = 0; i < g.NumPlayers(); ++i) u.push_back(CanonicalUtility(g, i));
    const Restriction r = sp.Full();
    const Restriction m = MOperator(sp, r, u);
    CHECK(m.IsSubsetOf(UOperator(sp, r)));
    CHECK(m == BeliefOperator(sp, r, u));
  }
}

TEST_CASE("M operator on the dynamic outside-option game") {
  const DynamicGame g = testing::DynamicOutside();
  const StrategySpace sp(g);
  const auto u = testing::PayoffUtilities(g, testing::DynamicOutsidePayoffs());
  std::vector<MdElimination> el;
  const Restriction m = MOperator(sp, sp.Full(), u, &el);
  CHECK(Names(sp, 0, m.sets[0]) == std::vector<std::string>{"IT", "IM"});
  CHECK(Names(sp, 1, m.sets[1]) == std::vector<std::string>{"L", "R"});
  CHECK(Names(sp, 0, UOperator(sp, sp.Full()).sets[0]) ==
        std::vector<std::string>{"IT", "IM", "ID"});
}

}  // namespace
}  // namespace icbd
