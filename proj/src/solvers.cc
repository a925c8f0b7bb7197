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

#include "icbd/solvers.h"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "icbd/errors.h"

namespace icbd {
namespace {

void CheckNonempty(const Restriction& r) {
  if (r.Empty()) Fail(ErrorCode::kPreconditionViolated, "reduction emptied a player's set");
}

EliminationRecord FromCertificate(int player, int strategy, int h,
                                  const BDominanceCertificate& cert) {
  EliminationRecord rec;
  rec.player = player;
  rec.strategy = strategy;
  rec.info_set = h;
  rec.certificate = cert;
  if (!cert.chain.empty()) {
    rec.dominator = cert.chain.front().first;
  } else if (!cert.entries.empty()) {
    rec.dominator = cert.entries.front().second;
  }
  return rec;
}

SolveResult Finalize(const StrategySpace& sp, SolveResult res, const Restriction& r) {
  res.fixpoint = r;
  res.outcomes = OutcomesOf(sp, r);
  res.iterations_to_fixpoint = static_cast<int>(res.trace.iterations.size());
  return res;
}

std::vector<int> Without(const std::vector<int>& v, const std::set<int>& drop) {
  std::vector<int> out;
  for (int x : v) {
    if (!drop.count(x)) out.push_back(x);
  }
  return out;
}

}  // namespace

SolveResult Icbd(const StrategySpace& sp, const std::optional<Restriction>& r0,
                 const BOptions& opts) {
  Restriction r = r0 ? *r0 : sp.Full();
  SolveResult res;
  while (true) {
    std::vector<UElimination> el;
    Restriction next = UOperator(sp, r, opts, &el);
    if (next == r) break;
    CheckNonempty(next);
    TraceIteration it;
    for (const auto& e : el) {
      it.eliminated.push_back(FromCertificate(e.player, e.strategy, e.info_set, e.certificate));
    }
    it.surviving = next;
    res.trace.iterations.push_back(it);
    r = next;
  }
  return Finalize(sp, res, r);
}

SolveResult Osr(const StrategySpace& sp, const std::optional<Restriction>& r0) {
  Restriction r = r0 ? *r0 : sp.Full();
  SolveResult res;
  while (true) {
    Restriction next = r;
    std::map<std::pair<int, int>, RationalityCertificate> certs;
    for (int i = 0; i < sp.NumPlayers(); ++i) {
      std::map<int, RationalityCertificate> ci;
      next.sets[i] = RationalitySet(sp, i, r, &ci);
      for (auto& [s, c] : ci) certs[{i, s}] = c;
    }
    if (next == r) {
      res.certificates = certs;
      break;
    }
    CheckNonempty(next);
    TraceIteration it;
    for (int i = 0; i < sp.NumPlayers(); ++i) {
      for (int s : r.sets[i]) {
        if (next.Contains(i, s)) continue;
        auto hit = ConditionallyBDominated(sp, i, s, r);
        if (hit) {
          it.eliminated.push_back(FromCertificate(i, s, hit->first, hit->second));
        } else {
          EliminationRecord rec;
          rec.player = i;
          rec.strategy = s;
          it.eliminated.push_back(rec);
        }
      }
    }
    it.surviving = next;
    res.trace.iterations.push_back(it);
    r = next;
  }
  return Finalize(sp, res, r);
}

SolveResult Icd(const StrategySpace& sp, const std::vector<UtilityFunction>& utilities,
                const std::optional<Restriction>& r0) {
  Restriction r = r0 ? *r0 : sp.Full();
  SolveResult res;
  while (true) {
    std::vector<MdElimination> el;
    Restriction next = MOperator(sp, r, utilities, &el);
    if (next == r) break;
    CheckNonempty(next);
    TraceIteration it;
    for (const auto& e : el) {
      EliminationRecord rec;
      rec.player = e.player;
      rec.strategy = e.strategy;
      rec.info_set = e.info_set;
      rec.mixture = e.dominator;
      it.eliminated.push_back(rec);
    }
    it.surviving = next;
    res.trace.iterations.push_back(it);
    r = next;
  }
  return Finalize(sp, res, r);
}

SolveResult LocalFirstReduction(const StrategySpace& sp) {
  const DynamicGame& g = sp.game();
  const int n = static_cast<int>(g.info_sets().size());
  std::vector<std::vector<int>> local(n);
  for (int h = 0; h < n; ++h) local[h] = sp.Full().sets[g.info_set(h).owner];
  auto global = [&](int j) {
    std::vector<int> out = sp.Full().sets[j];
    for (int h : g.OwnInfoSets(j)) {
      std::vector<int> next;
      std::set_intersection(out.begin(), out.end(), local[h].begin(), local[h].end(),
                            std::back_inserter(next));
      out.swap(next);
    }
    return out;
  };
  // Player j's surviving set as seen from information set h.
  auto view = [&](int j, int h) {
    if (g.info_set(h).owner == j) return local[h];
    for (int x : g.info_set(h).members) {
      for (const Move& mv : g.history(x).movers) {
        if (mv.player == j) return local[mv.info_set];
      }
    }
    return global(j);
  };
  auto snapshot = [&]() {
    Restriction r;
    for (int j = 0; j < sp.NumPlayers(); ++j) r.sets.push_back(global(j));
    return r;
  };
  SolveResult res;
  for (int round = 1;; ++round) {
    std::vector<std::pair<int, std::set<int>>> kills;  // (h, strategies)
    TraceIteration it;
    for (int h = 0; h < n; ++h) {
      const int i = g.info_set(h).owner;
      Restriction views;
      for (int j = 0; j < sp.NumPlayers(); ++j) views.sets.push_back(view(j, h));
      ConditionalProblem p = ReachingSets(sp, h, views);
      if (!p.Nonempty()) continue;
      BDominatedResult bd = BDominatedSet(sp, i, p);
      if (bd.dominated.empty()) continue;
      kills.emplace_back(h, std::set<int>(bd.dominated.begin(), bd.dominated.end()));
      for (int s : bd.dominated) {
        it.eliminated.push_back(FromCertificate(i, s, h, bd.certificates.at(s)));
      }
    }
    bool changed = false;
    for (const auto& [h, dead] : kills) {
      const int i = g.info_set(h).owner;
      std::vector<int> targets = {h};
      if (round > 1) targets = g.OwnInfoSets(i);
      for (int h2 : targets) {
        std::vector<int> kept = Without(local[h2], dead);
        changed = changed || kept != local[h2];
        local[h2] = kept;
      }
    }
    if (!changed) break;
    it.surviving = snapshot();
    res.trace.iterations.push_back(it);
  }
  Restriction r = snapshot();
  CheckNonempty(r);
  return Finalize(sp, res, r);
}

std::vector<int> FormOutcomes(const StrategicForm& sf, const Restriction& r) {
  std::set<int> out;
  std::vector<int> idx(sf.NumPlayers(), 0);
  while (true) {
    std::vector<int> prof(sf.NumPlayers());
    for (int j = 0; j < sf.NumPlayers(); ++j) prof[j] = r.sets[j][idx[j]];
    out.insert(sf.Outcome(prof));
    int j = sf.NumPlayers() - 1;
    while (j >= 0 && ++idx[j] == static_cast<int>(r.sets[j].size())) idx[j--] = 0;
    if (j < 0) break;
  }
  return std::vector<int>(out.begin(), out.end());
}

std::map<int, int> WeaklyDominatedInForm(const StrategicForm& sf, int i, const Restriction& r) {
  // Opponent profiles of R as full profiles with entry i to be filled.
  std::vector<std::vector<int>> opp;
  std::vector<int> idx(sf.NumPlayers(), 0);
  while (true) {
    std::vector<int> prof(sf.NumPlayers(), 0);
    for (int j = 0; j < sf.NumPlayers(); ++j) {
      if (j != i) prof[j] = r.sets[j][idx[j]];
    }
    opp.push_back(prof);
    int j = sf.NumPlayers() - 1;
    while (j >= 0) {
      if (j != i && ++idx[j] < static_cast<int>(r.sets[j].size())) break;
      idx[j--] = 0;
    }
    if (j < 0) break;
  }
  const auto& own = r.sets[i];
  std::vector<std::vector<int>> rank(own.size());
  for (size_t x = 0; x < own.size(); ++x) {
    for (auto prof : opp) {
      prof[i] = own[x];
      rank[x].push_back(sf.rank[i][sf.Outcome(prof)]);
    }
  }
  std::map<int, int> out;
  for (size_t b = 0; b < own.size(); ++b) {
    for (size_t a = 0; a < own.size(); ++a) {
      if (a == b) continue;
      bool weak = true, strict = false;
      for (size_t y = 0; y < opp.size() && weak; ++y) {
        weak = rank[a][y] <= rank[b][y];
        strict = strict || rank[a][y] < rank[b][y];
      }
      if (weak && strict) {
        out[own[b]] = own[a];
        break;
      }
    }
  }
  return out;
}

namespace {

SolveResult FinalizeForm(const StrategicForm& sf, SolveResult res, const Restriction& r) {
  res.fixpoint = r;
  res.outcomes = FormOutcomes(sf, r);
  res.iterations_to_fixpoint = static_cast<int>(res.trace.iterations.size());
  return res;
}

EliminationRecord WeakRecord(int i, int s, int t) {
  EliminationRecord rec;
  rec.player = i;
  rec.strategy = s;
  rec.dominator = t;
  return rec;
}

}  // namespace

SolveResult IteratedAdmissibility(const StrategicForm& sf) {
  Restriction r = sf.Full();
  SolveResult res;
  while (true) {
    TraceIteration it;
    Restriction next = r;
    for (int i = 0; i < sf.NumPlayers(); ++i) {
      std::map<int, int> dead = WeaklyDominatedInForm(sf, i, r);
      std::set<int> drop;
      for (const auto& [s, t] : dead) {
        drop.insert(s);
        it.eliminated.push_back(WeakRecord(i, s, t));
      }
      next.sets[i] = Without(r.sets[i], drop);
    }
    if (next == r) break;
    it.surviving = next;
    res.trace.iterations.push_back(it);
    r = next;
  }
  return FinalizeForm(sf, res, r);
}

SolveResult FullReductionWeakDominance(const StrategicForm& sf, const ReductionOrder& order) {
  Restriction r = sf.Full();
  SolveResult res;
  std::mt19937_64 rng(order.seed);
  size_t scripted = 0;
  while (true) {
    std::vector<std::pair<int, int>> candidates;
    std::map<std::pair<int, int>, int> dominator;
    for (int i = 0; i < sf.NumPlayers(); ++i) {
      for (const auto& [s, t] : WeaklyDominatedInForm(sf, i, r)) {
        candidates.emplace_back(i, s);
        dominator[{i, s}] = t;
      }
    }
    if (candidates.empty()) break;
    std::pair<int, int> pick = candidates.front();
    if (order.policy == OrderPolicy::kSeeded) {
      pick = candidates[rng() % candidates.size()];
    } else if (order.policy == OrderPolicy::kScripted && scripted < order.script.size()) {
      pick = order.script[scripted++];
      if (!dominator.count(pick)) {
        Fail(ErrorCode::kPreconditionViolated,
             "scripted strategy " + sf.strategy_names[pick.first][pick.second] +
                 " is not weakly dominated at its step");
      }
    }
    r.sets[pick.first] = Without(r.sets[pick.first], {pick.second});
    TraceIteration it;
    it.eliminated.push_back(WeakRecord(pick.first, pick.second, dominator[pick]));
    it.surviving = r;
    res.trace.iterations.push_back(it);
  }
  return FinalizeForm(sf, res, r);
}

namespace {

void RequirePerfectInformation(const DynamicGame& g) {
  if (!ClassifyGame(g).perfect_information) {
    Fail(ErrorCode::kNotPerfectInformation, "the game has simultaneous moves or imperfect information");
  }
}

}  // namespace

BackwardInductionResult BackwardInduction(const DynamicGame& g) {
  RequirePerfectInformation(g);
  const int n = static_cast<int>(g.histories().size());
  std::vector<std::vector<int>> outs(n);
  std::vector<int> sel(n, -1);
  BackwardInductionResult res;
  // Children carry larger preorder ids than their parents.
  for (int x = n - 1; x >= 0; --x) {
    const History& h = g.history(x);
    if (h.terminal >= 0) {
      outs[x] = {h.terminal};
      sel[x] = h.terminal;
      continue;
    }
    const int i = h.movers.front().player;
    std::vector<int> worst;
    for (int c : h.children) {
      int w = 0;
      for (int z : outs[c]) w = std::max(w, g.Rank(i, z));
      worst.push_back(w);
    }
    std::set<int> acc;
    int best = -1;
    for (size_t a = 0; a < h.children.size(); ++a) {
      const int c = h.children[a];
      for (int z : outs[c]) {
        bool ok = true;
        for (size_t b = 0; b < h.children.size() && ok; ++b) {
          if (b != a) ok = g.Rank(i, z) <= worst[b];
        }
        if (ok) acc.insert(z);
      }
      if (best < 0 || g.Rank(i, sel[c]) < g.Rank(i, sel[h.children[best]])) {
        best = static_cast<int>(a);
      }
    }
    outs[x].assign(acc.begin(), acc.end());
    sel[x] = sel[h.children[best]];
    res.spe[x] = best;
  }
  res.outcomes = outs[0];
  res.unique = res.outcomes.size() == 1;
  res.spe_outcome = sel[0];
  return res;
}

std::optional<NrtViolation> CheckNrt(const DynamicGame& g) {
  RequirePerfectInformation(g);
  for (int z = 0; z < g.NumTerminals(); ++z) {
    for (int z2 = z + 1; z2 < g.NumTerminals(); ++z2) {
      const int x = LastCommonPredecessor(g, z, z2);
      const int i = g.history(x).movers.front().player;
      if (g.Rank(i, z) == g.Rank(i, z2)) return NrtViolation{z, z2, i};
    }
  }
  return std::nullopt;
}

std::optional<TdiViolation> CheckTdi(const StrategicForm& sf) {
  for (int i = 0; i < sf.NumPlayers(); ++i) {
    for (int64_t f = 0; f < sf.NumProfiles(); ++f) {
      std::vector<int> prof = sf.Unflatten(f);
      const int o = sf.outcome[f];
      for (int s2 = prof[i] + 1; s2 < sf.NumStrategies(i); ++s2) {
        std::vector<int> other = prof;
        other[i] = s2;
        const int o2 = sf.Outcome(other);
        if (sf.rank[i][o] != sf.rank[i][o2]) continue;
        for (int j = 0; j < sf.NumPlayers(); ++j) {
          if (sf.rank[j][o] != sf.rank[j][o2]) {
            std::vector<int> opp = prof;
            opp[i] = -1;
            return TdiViolation{i, prof[i], s2, opp, j};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<TdiTreeViolation> CheckTdiTree(const DynamicGame& g) {
  RequirePerfectInformation(g);
  for (int z = 0; z < g.NumTerminals(); ++z) {
    for (int z2 = z + 1; z2 < g.NumTerminals(); ++z2) {
      const int x = LastCommonPredecessor(g, z, z2);
      const int i = g.history(x).movers.front().player;
      if (g.Rank(i, z) != g.Rank(i, z2)) continue;
      for (int j = 0; j < g.NumPlayers(); ++j) {
        if (g.Rank(j, z) != g.Rank(j, z2)) return TdiTreeViolation{z, z2, i, j};
      }
    }
  }
  return std::nullopt;
}

}  // namespace icbd
