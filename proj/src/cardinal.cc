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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "icbd/errors.h"
#include "icbd/lp.h"

namespace icbd {

UtilityFunction CanonicalUtility(const DynamicGame& g, int i) {
  UtilityFunction u;
  u.owner = i;
  for (int z = 0; z < g.NumTerminals(); ++z) u.values.emplace_back(g.MaxRank(i) - g.Rank(i, z));
  return u;
}

bool ValidateOrigination(const DynamicGame& g, const UtilityFunction& u,
                         const std::vector<int>& domain) {
  std::vector<int> zs = domain;
  if (zs.empty()) {
    for (int z = 0; z < g.NumTerminals(); ++z) zs.push_back(z);
  }
  if (static_cast<int>(u.values.size()) != g.NumTerminals()) return false;
  for (int a : zs) {
    for (int b : zs) {
      bool weak_pref = g.Rank(u.owner, a) <= g.Rank(u.owner, b);
      if (weak_pref != (u(a) >= u(b))) return false;
    }
  }
  return true;
}

std::vector<int> ConditioningEvent(const StrategySpace& sp, int i, int key) {
  if (key == kWholeSpace) {
    std::vector<int> all(sp.NumOpp(i));
    for (int y = 0; y < sp.NumOpp(i); ++y) all[y] = y;
    return all;
  }
  if (key < 0 || key >= static_cast<int>(sp.game().info_sets().size()) ||
      sp.game().info_set(key).owner != i) {
    Fail(ErrorCode::kUnknownConditioningEvent,
         "key " + std::to_string(key) + " is not a conditioning event of player " +
             std::to_string(i));
  }
  return sp.OppReach(key);
}

namespace {

// A1 and A2 for one measure on event `e`.
void CheckMeasure(int key, const Measure& m, const std::vector<int>& e,
                  std::vector<CpsViolation>& out) {
  Rational total = 0;
  for (const auto& [y, w] : m) {
    if (w < 0) out.push_back({"A2", key, -1, y, "negative weight " + FormatRational(w)});
    if (w != 0 && !std::binary_search(e.begin(), e.end(), y)) {
      out.push_back({"A1", key, -1, y, "mass outside the conditioning event"});
    }
    total += w;
  }
  if (total != 1) out.push_back({"A2", key, -1, -1, "total mass " + FormatRational(total)});
}

}  // namespace

std::vector<CpsViolation> ValidateCps(const StrategySpace& sp,
                                      const ConditionalProbabilitySystem& mu) {
  const int i = mu.owner;
  if (i < 0 || i >= sp.NumPlayers()) {
    Fail(ErrorCode::kUnknownConditioningEvent, "CPS owner out of range");
  }
  std::map<int, std::vector<int>> events;
  for (const auto& [key, m] : mu.measures) events[key] = ConditioningEvent(sp, i, key);
  std::vector<CpsViolation> out;
  std::vector<int> required = sp.game().OwnInfoSets(i);
  required.push_back(kWholeSpace);
  for (int key : required) {
    if (!mu.measures.count(key)) out.push_back({"A2", key, -1, -1, "no measure for this event"});
  }
  for (const auto& [key, m] : mu.measures) CheckMeasure(key, m, events[key], out);
  auto weight = [](const Measure& m, int y) {
    auto it = m.find(y);
    return it == m.end() ? Rational(0) : it->second;
  };
  for (const auto& [outer, e] : events) {
    for (const auto& [inner, e2] : events) {
      if (inner == outer) continue;
      if (!std::includes(e.begin(), e.end(), e2.begin(), e2.end())) continue;
      const Measure& mo = mu.measures.at(outer);
      const Measure& mi = mu.measures.at(inner);
      Rational mass = 0;
      for (int y : e2) mass += weight(mo, y);
      for (int y : e2) {
        if (weight(mo, y) != weight(mi, y) * mass) {
          out.push_back({"A3", inner, outer, y,
                         "mu(y|outer) = " + FormatRational(weight(mo, y)) +
                             " but mu(y|inner) * mu(inner|outer) = " +
                             FormatRational(weight(mi, y) * mass)});
        }
      }
    }
  }
  return out;
}

Rational ExpectedUtility(const StrategySpace& sp, int i, int s, const Measure& m,
                         const UtilityFunction& u) {
  Rational eu = 0;
  for (const auto& [y, w] : m) {
    if (w != 0) eu += w * u(sp.OutcomeOpp(i, s, y));
  }
  return eu;
}

Rational ExpectedUtilityAt(const StrategySpace& sp, int i, int h, const MixedStrategy& sigma,
                           const ConditionalProbabilitySystem& mu, const UtilityFunction& u,
                           const Restriction& r) {
  auto it = mu.measures.find(h);
  if (it == mu.measures.end()) Fail(ErrorCode::kInvalidCps, "no measure at the information set");
  std::vector<CpsViolation> v;
  CheckMeasure(h, it->second, ConditioningEvent(sp, i, h), v);
  if (!v.empty()) Fail(ErrorCode::kInvalidCps, v[0].axiom + ": " + v[0].detail);
  Rational eu = 0;
  for (const auto& [s, w] : sigma.weights) {
    if (w == 0) continue;
    if (!r.Contains(i, s)) {
      Fail(ErrorCode::kStrategyNotInRestriction, "mixed strategy support leaves R_i");
    }
    eu += w * ExpectedUtility(sp, i, s, it->second, u);
  }
  return eu;
}

namespace {

// a[x][y] = u(x, y) - u(s, y) over the problem.
std::vector<std::vector<Rational>> Advantage(const StrategySpace& sp, int i, int s,
                                             const ConditionalProblem& p,
                                             const UtilityFunction& u) {
  std::vector<std::vector<Rational>> a(p.own.size(), std::vector<Rational>(p.opp.size()));
  for (size_t x = 0; x < p.own.size(); ++x) {
    for (size_t y = 0; y < p.opp.size(); ++y) {
      a[x][y] = u(sp.OutcomeOpp(i, p.own[x], p.opp[y])) - u(sp.OutcomeOpp(i, s, p.opp[y]));
    }
  }
  return a;
}

void CheckProblem(const ConditionalProblem& p, int s) {
  if (!p.Nonempty()) Fail(ErrorCode::kEmptyProblem, "conditional problem has an empty side");
  if (!std::binary_search(p.own.begin(), p.own.end(), s)) {
    Fail(ErrorCode::kStrategyNotInRestriction, "strategy not on the problem's own side");
  }
}

}  // namespace

std::optional<MixedStrategy> MixedStrictlyDominated(const StrategySpace& sp, int i, int s,
                                                    const ConditionalProblem& p,
                                                    const UtilityFunction& u) {
  CheckProblem(p, s);
  auto a = Advantage(sp, i, s, p, u);
  const int n = static_cast<int>(p.own.size());
  Rational big = 0;
  for (const auto& row : a) {
    for (const auto& v : row) big = std::max(big, Rational(abs(v)));
  }
  big += 1;
  // Variables: sigma_0..sigma_{n-1}, tau' = tau + big.
  LpProblem lp;
  lp.num_vars = n + 1;
  lp.objective.assign(n + 1, Rational(0));
  lp.objective[n] = 1;
  for (size_t y = 0; y < p.opp.size(); ++y) {
    LpRow row;
    row.coeffs.assign(n + 1, Rational(0));
    for (int x = 0; x < n; ++x) row.coeffs[x] = -a[x][y];
    row.coeffs[n] = 1;
    row.sense = LpSense::kLe;
    row.rhs = big;
    lp.rows.push_back(row);
  }
  LpRow simplex;
  simplex.coeffs.assign(n + 1, Rational(1));
  simplex.coeffs[n] = 0;
  simplex.sense = LpSense::kEq;
  simplex.rhs = 1;
  lp.rows.push_back(simplex);
  LpSolution sol = SolveLp(lp);
  if (sol.status != LpStatus::kOptimal) {
    Fail(ErrorCode::kLpDegenerate, "margin program must have an optimum");
  }
  if (sol.value - big <= 0) return std::nullopt;
  MixedStrategy m;
  m.owner = i;
  for (int x = 0; x < n; ++x) {
    if (sol.x[x] != 0) m.weights[p.own[x]] = sol.x[x];
  }
  return m;
}

std::optional<Measure> BestReplyBelief(const StrategySpace& sp, int i, int s,
                                       const ConditionalProblem& p, const UtilityFunction& u) {
  CheckProblem(p, s);
  auto a = Advantage(sp, i, s, p, u);
  const int k = static_cast<int>(p.opp.size());
  LpProblem lp;
  lp.num_vars = k;
  lp.objective.assign(k, Rational(0));
  for (size_t x = 0; x < p.own.size(); ++x) {
    LpRow row;
    row.coeffs = a[x];
    row.sense = LpSense::kLe;
    row.rhs = 0;
    lp.rows.push_back(row);
  }
  LpRow simplex;
  simplex.coeffs.assign(k, Rational(1));
  simplex.sense = LpSense::kEq;
  simplex.rhs = 1;
  lp.rows.push_back(simplex);
  LpSolution sol = SolveLp(lp);
  if (sol.status == LpStatus::kInfeasible) return std::nullopt;
  if (sol.status != LpStatus::kOptimal) Fail(ErrorCode::kLpDegenerate, "belief program unbounded");
  Measure m;
  for (int y = 0; y < k; ++y) {
    if (sol.x[y] != 0) m[p.opp[y]] = sol.x[y];
  }
  return m;
}

Restriction MOperator(const StrategySpace& sp, const Restriction& r,
                      const std::vector<UtilityFunction>& u,
                      std::vector<MdElimination>* eliminated) {
  Restriction out = r;
  for (int i = 0; i < sp.NumPlayers(); ++i) {
    std::map<int, MdElimination> dead;
    for (int h : sp.game().OwnInfoSets(i)) {
      ConditionalProblem p = ReachingSets(sp, h, r);
      if (!p.Nonempty()) continue;
      for (int s : p.own) {
        if (dead.count(s)) continue;
        auto mix = MixedStrictlyDominated(sp, i, s, p, u[i]);
        if (mix) dead[s] = {i, s, h, *mix};
      }
    }
    std::vector<int> keep;
    for (int s : r.sets[i]) {
      if (!dead.count(s)) keep.push_back(s);
    }
    out.sets[i] = keep;
    if (eliminated) {
      for (auto& [s, e] : dead) eliminated->push_back(e);
    }
  }
  return out;
}

Restriction BeliefOperator(const StrategySpace& sp, const Restriction& r,
                           const std::vector<UtilityFunction>& u) {
  Restriction out = r;
  for (int i = 0; i < sp.NumPlayers(); ++i) {
    std::set<int> dead;
    for (int h : sp.game().OwnInfoSets(i)) {
      ConditionalProblem p = ReachingSets(sp, h, r);
      if (!p.Nonempty()) continue;
      for (int s : p.own) {
        if (!dead.count(s) && !BestReplyBelief(sp, i, s, p, u[i])) dead.insert(s);
      }
    }
    std::vector<int> keep;
    for (int s : r.sets[i]) {
      if (!dead.count(s)) keep.push_back(s);
    }
    out.sets[i] = keep;
  }
  return out;
}

}  // namespace icbd
