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

#include "icbd/witness.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "icbd/dominance.h"
#include "icbd/errors.h"

namespace icbd {
namespace {

// Constraint on the hierarchy: at level `level`, the measure restricted to
// `d` must make s a best reply among `x`.
struct Constraint {
  int level = 0;
  std::vector<int> d;
  std::vector<int> x;
};

struct LevelSolution {
  std::vector<Rational> u_rank;  // utility per rank of the owner
  std::vector<Measure> p;        // one distribution per level
};

class Builder {
 public:
  Builder(const StrategySpace& sp, int i, int s) : sp_(sp), g_(sp.game()), i_(i), s_(s) {}

  int Rank(int t, int y) const { return g_.Rank(i_, sp_.OutcomeOpp(i_, t, y)); }

  // Peels s's worst outcome class off the active profiles, solves the rest,
  // then mixes the peeled class back in with weight eps and pushes every
  // strictly worse outcome down by delta.
  LevelSolution Solve(const std::vector<std::vector<int>>& levels,
                      const std::vector<Constraint>& cons) const {
    const int k_count = static_cast<int>(levels.size());
    int w = -1;
    for (const auto& l : levels) {
      for (int y : l) w = std::max(w, Rank(s_, y));
    }
    if (w < 0) {
      LevelSolution base;
      base.u_rank.assign(g_.MaxRank(i_) + 1, Rational(1));
      base.p.assign(k_count, Measure());
      return base;
    }
    std::vector<std::vector<int>> rest(k_count), worst(k_count);
    for (int k = 0; k < k_count; ++k) {
      for (int y : levels[k]) (Rank(s_, y) == w ? worst : rest)[k].push_back(y);
    }
    std::vector<std::vector<int>> xprime(cons.size());
    std::vector<Constraint> sub;
    for (size_t c = 0; c < cons.size(); ++c) {
      for (int t : cons[c].x) {
        bool above = true;
        for (int y : cons[c].d) above = above && Rank(t, y) <= w;
        if (above) xprime[c].push_back(t);
      }
      Constraint next{cons[c].level, {}, xprime[c]};
      for (int y : cons[c].d) {
        if (Rank(s_, y) != w) next.d.push_back(y);
      }
      if (!next.d.empty()) sub.push_back(next);
    }
    LevelSolution bar = Solve(rest, sub);
    auto ub = [&](int t, int y) { return bar.u_rank[Rank(t, y)]; };

    Rational eps(1, 2);
    for (size_t c = 0; c < cons.size(); ++c) {
      const int k = cons[c].level;
      if (worst[k].empty() || rest[k].empty()) continue;
      for (int t : xprime[c]) {
        Rational a = 0, b = 0;
        for (int y : cons[c].d) {
          if (Rank(s_, y) == w) {
            b += ub(t, y) - ub(s_, y);
          } else {
            a += bar.p[k].at(y) * (ub(t, y) - ub(s_, y));
          }
        }
        b /= static_cast<long>(worst[k].size());
        if (a < 0 && b > 0) eps = std::min(eps, Rational(-a / (2 * (b - a))));
      }
    }
    LevelSolution out;
    out.p.resize(k_count);
    for (int k = 0; k < k_count; ++k) {
      if (worst[k].empty()) {
        out.p[k] = bar.p[k];
        continue;
      }
      Rational share = Rational(rest[k].empty() ? 1 : eps) / static_cast<long>(worst[k].size());
      for (int y : worst[k]) out.p[k][y] = share;
      if (!rest[k].empty()) {
        for (const auto& [y, q] : bar.p[k]) out.p[k][y] = (1 - eps) * q;
      }
    }
    Rational delta = 1;
    for (size_t c = 0; c < cons.size(); ++c) {
      const Measure& pk = out.p[cons[c].level];
      for (int t : cons[c].x) {
        if (std::binary_search(xprime[c].begin(), xprime[c].end(), t)) continue;
        Rational diff = 0;
        Rational q = -1;
        for (int y : cons[c].d) {
          diff += pk.at(y) * (ub(t, y) - ub(s_, y));
          if (q < 0 || pk.at(y) < q) q = pk.at(y);
        }
        delta = std::max(delta, Rational(diff / q + 1));
      }
    }
    out.u_rank = bar.u_rank;
    for (int r = w + 1; r < static_cast<int>(out.u_rank.size()); ++r) out.u_rank[r] -= delta;
    return out;
  }

  // Adds eta times the canonical utility, with eta small enough to keep
  // every strict constraint strict.
  void Strictify(LevelSolution& sol, const std::vector<Constraint>& cons) const {
    const int maxr = g_.MaxRank(i_);
    Rational gap = -1;
    for (const auto& c : cons) {
      const Measure& pk = sol.p[c.level];
      for (int t : c.x) {
        Rational diff = 0;
        for (int y : c.d) diff += pk.at(y) * (sol.u_rank[Rank(s_, y)] - sol.u_rank[Rank(t, y)]);
        if (diff > 0 && (gap < 0 || diff < gap)) gap = diff;
      }
    }
    Rational eta = gap < 0 ? Rational(1) : Rational(gap / (2 * maxr + 2));
    for (int r = 0; r <= maxr; ++r) sol.u_rank[r] += eta * (maxr - r);
  }

  UtilityFunction Utility(const LevelSolution& sol) const {
    UtilityFunction u;
    u.owner = i_;
    for (int z = 0; z < g_.NumTerminals(); ++z) u.values.push_back(sol.u_rank[g_.Rank(i_, z)]);
    return u;
  }

  // Solves the constrained levels and gives every other level a uniform
  // distribution; then reads off the CPS.
  RationalityCertificate Finish(const Restriction& r, const std::vector<std::vector<int>>& levels,
                                const std::vector<Constraint>& cons, bool cautious,
                                const WitnessOptions& opts) const {
    std::vector<char> used(levels.size(), 0);
    for (const auto& c : cons) used[c.level] = 1;
    std::vector<std::vector<int>> active(levels.size());
    for (size_t k = 0; k < levels.size(); ++k) {
      if (used[k]) active[k] = levels[k];
    }
    LevelSolution sol = Solve(active, cons);
    if (opts.strict_origin) Strictify(sol, cons);
    for (size_t k = 0; k < levels.size(); ++k) {
      if (used[k]) continue;
      for (int y : levels[k]) sol.p[k][y] = Rational(1, static_cast<long>(levels[k].size()));
    }
    RationalityCertificate cert;
    cert.player = i_;
    cert.strategy = s_;
    cert.restriction = r;
    cert.utility = Utility(sol);
    cert.cautious = cautious;
    cert.strict_origin = opts.strict_origin;
    cert.cps.owner = i_;
    std::vector<int> keys = g_.OwnInfoSets(i_);
    keys.push_back(kWholeSpace);
    for (int key : keys) {
      std::vector<int> e = ConditioningEvent(sp_, i_, key);
      for (size_t k = 0; k < levels.size(); ++k) {
        std::vector<int> inter;
        std::set_intersection(levels[k].begin(), levels[k].end(), e.begin(), e.end(),
                              std::back_inserter(inter));
        if (inter.empty()) continue;
        Rational mass = 0;
        for (int y : inter) mass += sol.p[k].at(y);
        Measure m;
        for (int y : inter) m[y] = sol.p[k].at(y) / mass;
        cert.cps.measures[key] = m;
        break;
      }
    }
    return cert;
  }

 private:
  const StrategySpace& sp_;
  const DynamicGame& g_;
  int i_;
  int s_;
};

bool AdmissibleAgainst(const StrategySpace& sp, int i, int s, const std::vector<int>& own,
                       const std::vector<int>& opp) {
  std::vector<int> rows = {s};
  for (int t : own) {
    if (t != s) rows.push_back(t);
  }
  RankMatrix m = ProblemMatrix(sp, i, rows, opp);
  std::vector<int> cols(opp.size());
  for (size_t y = 0; y < opp.size(); ++y) cols[y] = static_cast<int>(y);
  for (int x = 1; x < m.rows; ++x) {
    if (RowWeaklyDominates(m, x, 0, cols)) return false;
  }
  return true;
}

std::vector<int> RelevantInfoSets(const StrategySpace& sp, int i, int s, const Restriction& r) {
  std::vector<int> out;
  for (int h : sp.OwnAllowedInfoSets(i, s)) {
    if (ReachingSets(sp, h, r).Nonempty()) out.push_back(h);
  }
  return out;
}

std::vector<int> Complement(int n, const std::vector<int>& in) {
  std::vector<int> out;
  for (int y = 0; y < n; ++y) {
    if (!std::binary_search(in.begin(), in.end(), y)) out.push_back(y);
  }
  return out;
}

void CheckStrategy(const StrategySpace& sp, int i, int s, const Restriction& r) {
  if (i < 0 || i >= sp.NumPlayers() || !r.Contains(i, s)) {
    Fail(ErrorCode::kStrategyNotInRestriction, "strategy is not in R_i");
  }
}

// Depth-first placement of the relevant information sets into levels.
class HierarchySearch {
 public:
  HierarchySearch(const StrategySpace& sp, int i, int s, const Restriction& r, int cap)
      : sp_(sp), i_(i), s_(s), r_(r), cap_(cap), relevant_(RelevantInfoSets(sp, i, s, r)) {}

  bool Run() { return Place(0); }
  const std::vector<std::vector<int>>& levels() const { return levels_; }
  const std::vector<Constraint>& constraints() const { return cons_; }

 private:
  bool Place(size_t idx) {
    if (idx == relevant_.size()) return true;
    if (--budget_ < 0) {
      Fail(ErrorCode::kWitnessSearchExhausted, "belief hierarchy search budget exhausted");
    }
    const int h = relevant_[idx];
    ConditionalProblem p = ReachingSets(sp_, h, r_);
    const std::vector<int>& e = sp_.OppReach(h);
    for (size_t k = 0; k < levels_.size(); ++k) {
      std::vector<int> d;
      std::set_intersection(levels_[k].begin(), levels_[k].end(), e.begin(), e.end(),
                            std::back_inserter(d));
      if (d.empty()) continue;
      if (!AdmissibleAgainst(sp_, i_, s_, p.own, d)) return false;
      cons_.push_back({static_cast<int>(k), d, p.own});
      if (Place(idx + 1)) return true;
      cons_.pop_back();
      return false;
    }
    std::vector<int> qmax = MaximalAdmissibleSubset(sp_, i_, s_, p);
    std::vector<std::vector<int>> candidates = {qmax};
    if (static_cast<int>(qmax.size()) <= cap_) {
      std::vector<std::vector<int>> more;
      for (uint32_t mask = 1; mask + 1 < (1u << qmax.size()); ++mask) {
        std::vector<int> q;
        for (size_t b = 0; b < qmax.size(); ++b) {
          if (mask >> b & 1u) q.push_back(qmax[b]);
        }
        if (AdmissibleAgainst(sp_, i_, s_, p.own, q)) more.push_back(q);
      }
      std::stable_sort(more.begin(), more.end(),
                       [](const auto& a, const auto& b) { return a.size() > b.size(); });
      candidates.insert(candidates.end(), more.begin(), more.end());
    }
    for (const auto& q : candidates) {
      if (q.empty()) continue;
      levels_.push_back(q);
      cons_.push_back({static_cast<int>(levels_.size()) - 1, q, p.own});
      if (Place(idx + 1)) return true;
      cons_.pop_back();
      levels_.pop_back();
    }
    return false;
  }

  const StrategySpace& sp_;
  int i_;
  int s_;
  const Restriction& r_;
  int cap_;
  std::vector<int> relevant_;
  std::vector<std::vector<int>> levels_;
  std::vector<Constraint> cons_;
  long budget_ = 200000;
};

}  // namespace

CertificateReport CheckRationalityCertificate(const StrategySpace& sp,
                                              const RationalityCertificate& cert) {
  CertificateReport rep;
  auto fail = [&](const std::string& why) {
    rep.ok = false;
    rep.violations.push_back(why);
  };
  const int i = cert.player;
  const Restriction& r = cert.restriction;
  if (i < 0 || i >= sp.NumPlayers() || static_cast<int>(r.sets.size()) != sp.NumPlayers()) {
    fail("player or restriction out of range");
    return rep;
  }
  if (!r.Contains(i, cert.strategy)) fail("strategy not in R_i");
  if (cert.utility.owner != i || cert.cps.owner != i ||
      static_cast<int>(cert.utility.values.size()) != sp.game().NumTerminals()) {
    fail("utility or CPS has the wrong owner or domain");
    return rep;
  }
  if (!rep.ok) return rep;
  try {
    for (const auto& v : ValidateCps(sp, cert.cps)) {
      fail("CPS " + v.axiom + " at event " + std::to_string(v.event) + ": " + v.detail);
    }
  } catch (const IcbdError& e) {
    fail(e.what());
  }
  if (!rep.ok) return rep;
  const DynamicGame& g = sp.game();
  std::vector<int> zs = OutcomesOf(sp, r);
  if (cert.strict_origin) {
    if (!ValidateOrigination(g, cert.utility, zs)) fail("utility does not represent the preference");
  } else {
    for (int a : zs) {
      for (int b : zs) {
        if (g.Rank(i, a) < g.Rank(i, b) && cert.utility(a) < cert.utility(b)) {
          fail("utility reverses a strict preference");
        }
        if (g.Rank(i, a) == g.Rank(i, b) && cert.utility(a) != cert.utility(b)) {
          fail("utility separates indifferent outcomes");
        }
      }
    }
  }
  if (!cert.cautious) {
    for (const auto& [key, m] : cert.cps.measures) {
      std::vector<int> e = ConditioningEvent(sp, i, key);
      bool meets = false;
      for (int y : e) meets = meets || OppInRestriction(sp, i, y, r);
      if (!meets) continue;
      Rational inside = 0;
      for (const auto& [y, w] : m) {
        if (OppInRestriction(sp, i, y, r)) inside += w;
      }
      if (inside != 1) fail("belief at event " + std::to_string(key) + " leaves R_{-i}");
    }
  }
  for (int h : RelevantInfoSets(sp, i, cert.strategy, r)) {
    ConditionalProblem p = ReachingSets(sp, h, r);
    const Measure& m = cert.cps.measures.at(h);
    if (cert.cautious) {
      std::vector<int> support;
      for (const auto& [y, w] : m) {
        if (w != 0) support.push_back(y);
      }
      if (support != p.opp) fail("support at " + std::to_string(h) + " differs from R_{-i}(h)");
    }
    Rational best = ExpectedUtility(sp, i, cert.strategy, m, cert.utility);
    for (int t : p.own) {
      Rational eu = ExpectedUtility(sp, i, t, m, cert.utility);
      if (eu > best) {
        fail(sp.Name(i, t) + " beats " + sp.Name(i, cert.strategy) + " at information set " +
             g.info_set(h).label + " (" + FormatRational(eu) + " > " + FormatRational(best) + ")");
      }
    }
  }
  return rep;
}

bool VerifyRationalityCertificate(const StrategySpace& sp, const RationalityCertificate& cert) {
  return CheckRationalityCertificate(sp, cert).ok;
}

RationalityCertificate ConstructWitness(const StrategySpace& sp, int i, int s,
                                        const Restriction& r, const WitnessOptions& opts) {
  CheckStrategy(sp, i, s, r);
  std::vector<Constraint> cons;
  for (int h : RelevantInfoSets(sp, i, s, r)) {
    ConditionalProblem p = ReachingSets(sp, h, r);
    if (!AdmissibleAgainst(sp, i, s, p.own, p.opp)) {
      Fail(ErrorCode::kHypothesisViolated,
           sp.Name(i, s) + " is weakly dominated at information set " +
               sp.game().info_set(h).label);
    }
    cons.push_back({0, p.opp, p.own});
  }
  std::vector<int> inside = RestrictedOpp(sp, i, r);
  std::vector<std::vector<int>> levels = {inside};
  std::vector<int> outside = Complement(sp.NumOpp(i), inside);
  if (!outside.empty()) levels.push_back(outside);
  Builder b(sp, i, s);
  return b.Finish(r, levels, cons, true, opts);
}

RationalityCertificate ConstructSequentialWitness(const StrategySpace& sp, int i, int s,
                                                  const Restriction& r,
                                                  const WitnessOptions& opts) {
  CheckStrategy(sp, i, s, r);
  if (auto hit = ConditionallyBDominated(sp, i, s, r)) {
    Fail(ErrorCode::kHypothesisViolated,
         sp.Name(i, s) + " is conditionally B-dominated at information set " +
             sp.game().info_set(hit->first).label);
  }
  HierarchySearch search(sp, i, s, r, opts.backtrack_cap);
  if (!search.Run()) {
    Fail(ErrorCode::kWitnessSearchExhausted,
         "no belief hierarchy found for " + sp.Name(i, s));
  }
  std::vector<std::vector<int>> levels = search.levels();
  std::vector<int> inside = RestrictedOpp(sp, i, r);
  std::set<int> covered;
  for (const auto& l : levels) covered.insert(l.begin(), l.end());
  std::vector<int> left;
  for (int y : inside) {
    if (!covered.count(y)) left.push_back(y);
  }
  if (!left.empty()) levels.push_back(left);
  std::vector<int> outside = Complement(sp.NumOpp(i), inside);
  if (!outside.empty()) levels.push_back(outside);
  Builder b(sp, i, s);
  return b.Finish(r, levels, search.constraints(), false, opts);
}

std::vector<int> RationalitySet(const StrategySpace& sp, int i, const Restriction& r,
                                std::map<int, RationalityCertificate>* certificates) {
  std::vector<int> out;
  for (int s : r.sets[i]) {
    if (ConditionallyBDominated(sp, i, s, r)) continue;
    try {
      RationalityCertificate cert = ConstructSequentialWitness(sp, i, s, r);
      if (!VerifyRationalityCertificate(sp, cert)) continue;
      out.push_back(s);
      if (certificates) (*certificates)[s] = cert;
    } catch (const IcbdError& e) {
      if (e.code() != ErrorCode::kWitnessSearchExhausted) throw;
    }
  }
  return out;
}

namespace {

std::set<int> MSurvivors(const StrategySpace& sp, int i, const Restriction& r,
                         const UtilityFunction& u) {
  std::set<int> dead;
  for (int h : sp.game().OwnInfoSets(i)) {
    ConditionalProblem p = ReachingSets(sp, h, r);
    if (!p.Nonempty()) continue;
    for (int s : p.own) {
      if (!dead.count(s) && MixedStrictlyDominated(sp, i, s, p, u)) dead.insert(s);
    }
  }
  std::set<int> out;
  for (int s : r.sets[i]) {
    if (!dead.count(s)) out.insert(s);
  }
  return out;
}

}  // namespace

UtilityFunction UtilityWitnessForOperator(const StrategySpace& sp, int i, const Restriction& r) {
  const DynamicGame& g = sp.game();
  std::vector<int> target = UOperator(sp, r).sets[i];
  auto works = [&](const UtilityFunction& u) {
    std::set<int> m = MSurvivors(sp, i, r, u);
    return std::includes(m.begin(), m.end(), target.begin(), target.end());
  };
  std::vector<UtilityFunction> candidates = {CanonicalUtility(g, i)};
  for (int s : target) {
    try {
      candidates.push_back(ConstructSequentialWitness(sp, i, s, r).utility);
    } catch (const IcbdError& e) {
      if (e.code() != ErrorCode::kWitnessSearchExhausted) throw;
    }
  }
  for (const auto& u : candidates) {
    if (works(u)) return u;
  }
  // Positive combinations of the per-strategy witnesses.
  const size_t n = candidates.size();
  for (Rational lambda : {Rational(1), Rational(1, 10), Rational(10)}) {
    UtilityFunction mix;
    mix.owner = i;
    mix.values.assign(g.NumTerminals(), Rational(0));
    Rational weight = 1;
    for (size_t c = 1; c < n; ++c) {
      for (int z = 0; z < g.NumTerminals(); ++z) mix.values[z] += weight * candidates[c](z);
      weight *= lambda;
    }
    if (n > 1 && works(mix)) return mix;
  }
  Fail(ErrorCode::kWitnessSearchExhausted,
       "no candidate utility keeps every survivor of player " + g.PlayerName(i));
}

MonotonicityReport CheckConditionalMonotonicity(const StrategySpace& sp, int i,
                                                const Restriction& r,
                                                const ConditionalRankings& rankings) {
  MonotonicityReport rep;
  std::set<int> expected;
  for (int h : sp.game().OwnInfoSets(i)) {
    ConditionalProblem p = ReachingSets(sp, h, r);
    if (!p.Nonempty()) continue;
    expected.insert(h);
    auto it = rankings.find(h);
    if (it == rankings.end()) {
      Fail(ErrorCode::kDomainMismatch, "no ranking at information set " + std::to_string(h));
    }
    std::vector<int> keys;
    for (const auto& [s, rk] : it->second) keys.push_back(s);
    if (keys != p.own) {
      Fail(ErrorCode::kDomainMismatch,
           "ranking at information set " + std::to_string(h) + " does not cover R_i(h)");
    }
    RankMatrix m = ProblemMatrix(sp, i, p.own, p.opp);
    std::vector<int> cols(p.opp.size());
    for (size_t y = 0; y < cols.size(); ++y) cols[y] = static_cast<int>(y);
    for (int a = 0; a < m.rows; ++a) {
      for (int b = 0; b < m.rows; ++b) {
        if (a == b) continue;
        bool weakly_better = true;
        bool strictly = false;
        for (int y : cols) {
          weakly_better = weakly_better && m.At(a, y) <= m.At(b, y);
          strictly = strictly || m.At(a, y) < m.At(b, y);
        }
        if (!weakly_better) continue;
        int ra = it->second.at(p.own[a]);
        int rb = it->second.at(p.own[b]);
        std::string pair = sp.Name(i, p.own[a]) + " over " + sp.Name(i, p.own[b]) + " at " +
                           sp.game().info_set(h).label;
        if (ra > rb) {
          rep.weak_ok = false;
          rep.violations.push_back("weak: " + pair);
        }
        if (strictly && ra >= rb) {
          rep.strong_ok = false;
          rep.violations.push_back("strong: " + pair);
        }
      }
    }
  }
  for (const auto& [h, rk] : rankings) {
    if (!expected.count(h)) {
      Fail(ErrorCode::kDomainMismatch,
           "ranking given at information set " + std::to_string(h) + " with an empty problem");
    }
  }
  return rep;
}

ConditionalRankings RankingsFromCertificate(const StrategySpace& sp,
                                            const RationalityCertificate& cert) {
  ConditionalRankings out;
  const int i = cert.player;
  for (int h : sp.game().OwnInfoSets(i)) {
    ConditionalProblem p = ReachingSets(sp, h, cert.restriction);
    if (!p.Nonempty()) continue;
    const Measure& m = cert.cps.measures.at(h);
    std::map<int, Rational> eu;
    std::set<Rational> values;
    for (int t : p.own) {
      eu[t] = ExpectedUtility(sp, i, t, m, cert.utility);
      values.insert(eu[t]);
    }
    for (int t : p.own) {
      int above = 0;
      for (const auto& v : values) above += v > eu[t];
      out[h][t] = above;
    }
  }
  return out;
}

bool RationalizePreferencePair(const StrategySpace& sp, int i, int s, const Restriction& r,
                               RationalizationMode mode, RationalityCertificate* certificate) {
  CheckStrategy(sp, i, s, r);
  if (ConditionallyBDominated(sp, i, s, r)) return false;
  RationalityCertificate cert = ConstructSequentialWitness(sp, i, s, r);
  if (!VerifyRationalityCertificate(sp, cert)) return false;
  if (mode == RationalizationMode::kCm) {
    ConditionalRankings rk = RankingsFromCertificate(sp, cert);
    if (!CheckConditionalMonotonicity(sp, i, r, rk).weak_ok) return false;
    for (int h : RelevantInfoSets(sp, i, s, r)) {
      if (rk.at(h).at(s) != 0) return false;
    }
  }
  if (certificate) *certificate = cert;
  return true;
}

}  // namespace icbd
