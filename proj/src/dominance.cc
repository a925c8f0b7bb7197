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
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "icbd/errors.h"

namespace icbd {

RankMatrix ProblemMatrix(const StrategySpace& sp, int i, const std::vector<int>& own,
                         const std::vector<int>& opp) {
  RankMatrix m;
  m.rows = static_cast<int>(own.size());
  m.cols = static_cast<int>(opp.size());
  m.r.resize(static_cast<size_t>(m.rows) * m.cols);
  for (int x = 0; x < m.rows; ++x) {
    for (int y = 0; y < m.cols; ++y) {
      m.r[static_cast<size_t>(x) * m.cols + y] = sp.game().Rank(i, sp.OutcomeOpp(i, own[x], opp[y]));
    }
  }
  return m;
}

bool RowWeaklyDominates(const RankMatrix& m, int a, int b, const std::vector<int>& cols) {
  bool strict = false;
  for (int y : cols) {
    if (m.At(a, y) > m.At(b, y)) return false;
    if (m.At(a, y) < m.At(b, y)) strict = true;
  }
  return strict;
}

bool RowStrictlyDominates(const RankMatrix& m, int a, int b, const std::vector<int>& cols) {
  if (cols.empty()) return false;
  for (int y : cols) {
    if (m.At(a, y) >= m.At(b, y)) return false;
  }
  return true;
}

PeelResult PeelRow(const RankMatrix& m, int row) {
  PeelResult res;
  std::vector<int> q(m.cols);
  for (int y = 0; y < m.cols; ++y) q[y] = y;
  while (!q.empty()) {
    int t = -1;
    for (int x = 0; x < m.rows && t < 0; ++x) {
      if (x != row && RowWeaklyDominates(m, x, row, q)) t = x;
    }
    if (t < 0) {
      res.admissible_cols = q;
      return res;
    }
    std::vector<int> dropped, kept;
    for (int y : q) {
      (m.At(t, y) < m.At(row, y) ? dropped : kept).push_back(y);
    }
    res.chain.emplace_back(t, dropped);
    q.swap(kept);
  }
  res.dominated = true;
  return res;
}

namespace {

bool AdmissibleOn(const RankMatrix& m, int row, const std::vector<int>& cols) {
  for (int x = 0; x < m.rows; ++x) {
    if (x != row && RowWeaklyDominates(m, x, row, cols)) return false;
  }
  return true;
}

int FirstWeakDominator(const RankMatrix& m, int row, const std::vector<int>& cols) {
  for (int x = 0; x < m.rows; ++x) {
    if (x != row && RowWeaklyDominates(m, x, row, cols)) return x;
  }
  return -1;
}

// Product subsets contained in the column set; calls f(cols) for each.
// Returns false as soon as f returns false.
bool ForEachProductSubset(const std::vector<std::vector<int>>& comps, int cap,
                          const std::function<bool(const std::vector<int>&)>& f) {
  if (comps.empty()) return true;
  const size_t slots = comps[0].size();
  std::vector<std::vector<int>> values(slots);
  for (size_t k = 0; k < slots; ++k) {
    std::set<int> v;
    for (const auto& c : comps) v.insert(c[k]);
    values[k].assign(v.begin(), v.end());
  }
  size_t bits = 0;
  for (const auto& v : values) bits += v.size();
  if (bits > static_cast<size_t>(cap)) {
    Fail(ErrorCode::kSizeCap, "product-subset enumeration over " + std::to_string(bits) +
                                  " opponent strategies exceeds " + std::to_string(cap));
  }
  std::map<std::vector<int>, int> col_of;
  for (size_t y = 0; y < comps.size(); ++y) col_of[comps[y]] = static_cast<int>(y);
  std::vector<uint32_t> mask(slots, 1);
  while (true) {
    // Build the product for the current masks.
    std::vector<std::vector<int>> prods = {{}};
    for (size_t k = 0; k < slots; ++k) {
      std::vector<std::vector<int>> next;
      for (const auto& pre : prods) {
        for (size_t b = 0; b < values[k].size(); ++b) {
          if (mask[k] >> b & 1u) {
            auto v = pre;
            v.push_back(values[k][b]);
            next.push_back(v);
          }
        }
      }
      prods.swap(next);
    }
    std::vector<int> cols;
    bool inside = true;
    for (const auto& p : prods) {
      auto it = col_of.find(p);
      if (it == col_of.end()) {
        inside = false;
        break;
      }
      cols.push_back(it->second);
    }
    if (inside) {
      std::sort(cols.begin(), cols.end());
      if (!f(cols)) return false;
    }
    size_t k = 0;
    while (k < slots) {
      ++mask[k];
      if (mask[k] < (1u << values[k].size())) break;
      mask[k] = 1;
      ++k;
    }
    if (k == slots) break;
  }
  return true;
}

}  // namespace

bool BDominatedExhaustive(const RankMatrix& m, int row, int cap) {
  if (m.cols > cap) {
    Fail(ErrorCode::kSizeCap, "exhaustive subset enumeration over " + std::to_string(m.cols) +
                                  " opponent profiles exceeds " + std::to_string(cap));
  }
  const uint64_t n = uint64_t{1} << m.cols;
  std::vector<int> cols;
  for (uint64_t mask = 1; mask < n; ++mask) {
    cols.clear();
    for (int y = 0; y < m.cols; ++y) {
      if (mask >> y & 1u) cols.push_back(y);
    }
    if (AdmissibleOn(m, row, cols)) return false;
  }
  return true;
}

bool BDominatedProductSubsets(const RankMatrix& m, int row,
                              const std::vector<std::vector<int>>& col_components, int cap) {
  return ForEachProductSubset(col_components, cap, [&](const std::vector<int>& cols) {
    return !AdmissibleOn(m, row, cols);
  });
}

bool VerifyWitness(const StrategySpace& sp, const DominanceWitness& w) {
  if (w.player < 0 || w.player >= sp.NumPlayers()) return false;
  const int n = sp.NumStrategies(w.player);
  if (w.dominated < 0 || w.dominated >= n || w.dominator < 0 || w.dominator >= n) return false;
  if (w.opp.empty()) return false;
  bool strict_somewhere = false;
  for (int y : w.opp) {
    if (y < 0 || y >= sp.NumOpp(w.player)) return false;
    int a = sp.game().Rank(w.player, sp.OutcomeOpp(w.player, w.dominator, y));
    int b = sp.game().Rank(w.player, sp.OutcomeOpp(w.player, w.dominated, y));
    if (a > b) return false;
    if (a == b && w.kind == DominanceKind::kStrict) return false;
    if (a < b) strict_somewhere = true;
  }
  return strict_somewhere;
}

int BDominanceCertificate::DominatorFor(const std::vector<int>& q) const {
  if (!entries.empty()) {
    std::vector<int> key = q;
    std::sort(key.begin(), key.end());
    for (const auto& [cols, d] : entries) {
      if (cols == key) return d;
    }
    return -1;
  }
  std::set<int> qs(q.begin(), q.end());
  for (const auto& [d, removed] : chain) {
    for (int y : removed) {
      if (qs.count(y)) return d;
    }
  }
  return -1;
}

std::map<std::vector<int>, int> BDominanceCertificate::Expand() const {
  if (!entries.empty()) {
    return std::map<std::vector<int>, int>(entries.begin(), entries.end());
  }
  if (opp.size() > 20) {
    Fail(ErrorCode::kSizeCap, "certificate expansion over " + std::to_string(opp.size()) +
                                  " opponent profiles");
  }
  std::map<std::vector<int>, int> out;
  const uint64_t n = uint64_t{1} << opp.size();
  for (uint64_t mask = 1; mask < n; ++mask) {
    std::vector<int> q;
    for (size_t k = 0; k < opp.size(); ++k) {
      if (mask >> k & 1u) q.push_back(opp[k]);
    }
    out[q] = DominatorFor(q);
  }
  return out;
}

bool VerifyCertificate(const StrategySpace& sp, const BDominanceCertificate& c) {
  const int i = c.player;
  if (i < 0 || i >= sp.NumPlayers()) return false;
  if (!std::binary_search(c.own.begin(), c.own.end(), c.strategy)) return false;
  auto rank = [&](int s, int y) { return sp.game().Rank(i, sp.OutcomeOpp(i, s, y)); };
  auto weak_on = [&](int d, const std::vector<int>& q) {
    if (d == c.strategy || !std::binary_search(c.own.begin(), c.own.end(), d)) return false;
    bool strict = false;
    for (int y : q) {
      if (rank(d, y) > rank(c.strategy, y)) return false;
      if (rank(d, y) < rank(c.strategy, y)) strict = true;
    }
    return strict;
  };
  if (!c.entries.empty()) {
    for (const auto& [q, d] : c.entries) {
      if (q.empty() || !weak_on(d, q)) return false;
    }
    return true;
  }
  std::set<int> remaining(c.opp.begin(), c.opp.end());
  if (remaining.empty()) return false;
  for (const auto& [d, removed] : c.chain) {
    if (removed.empty()) return false;
    std::vector<int> q(remaining.begin(), remaining.end());
    if (!weak_on(d, q)) return false;
    for (int y : removed) {
      if (!remaining.count(y) || rank(d, y) >= rank(c.strategy, y)) return false;
      remaining.erase(y);
    }
  }
  return remaining.empty();
}

namespace {

void CheckMember(const Restriction& r, int i, int s) {
  if (!r.Contains(i, s)) {
    Fail(ErrorCode::kStrategyNotInRestriction,
         "strategy " + std::to_string(s) + " of player " + std::to_string(i) +
             " is not in the restriction");
  }
}

std::vector<int> AllCols(int n) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k;
  return v;
}

std::vector<std::vector<int>> ColumnComponents(const StrategySpace& sp, int i,
                                               const std::vector<int>& opp) {
  std::vector<std::vector<int>> comps;
  for (int y : opp) {
    std::vector<int> c;
    for (int j = 0; j < sp.NumPlayers(); ++j) {
      if (j != i) c.push_back(sp.OppComponent(i, y, j));
    }
    comps.push_back(c);
  }
  return comps;
}

}  // namespace

bool StrictlyDominates(const StrategySpace& sp, int i, int s_star, int s, const Restriction& r) {
  CheckMember(r, i, s_star);
  CheckMember(r, i, s);
  std::vector<int> opp = RestrictedOpp(sp, i, r);
  RankMatrix m = ProblemMatrix(sp, i, {s_star, s}, opp);
  return RowStrictlyDominates(m, 0, 1, AllCols(m.cols));
}

bool WeaklyDominates(const StrategySpace& sp, int i, int s_star, int s, const Restriction& r) {
  CheckMember(r, i, s_star);
  CheckMember(r, i, s);
  std::vector<int> opp = RestrictedOpp(sp, i, r);
  RankMatrix m = ProblemMatrix(sp, i, {s_star, s}, opp);
  return RowWeaklyDominates(m, 0, 1, AllCols(m.cols));
}

std::vector<int> AdmissibleSet(const StrategySpace& sp, int i, const Restriction& r) {
  std::vector<int> opp = RestrictedOpp(sp, i, r);
  RankMatrix m = ProblemMatrix(sp, i, r.sets[i], opp);
  std::vector<int> cols = AllCols(m.cols);
  std::vector<int> out;
  for (int x = 0; x < m.rows; ++x) {
    if (AdmissibleOn(m, x, cols)) out.push_back(r.sets[i][x]);
  }
  return out;
}

BDominatedResult BDominatedSet(const StrategySpace& sp, int i, const ConditionalProblem& p,
                               const BOptions& opts) {
  if (p.own.empty() || p.opp.empty()) {
    Fail(ErrorCode::kEmptyProblem, "conditional problem has an empty side");
  }
  BDominatedResult res;
  RankMatrix m = ProblemMatrix(sp, i, p.own, p.opp);
  std::vector<std::vector<int>> comps;
  if (opts.product_subsets) comps = ColumnComponents(sp, i, p.opp);
  std::map<std::vector<int>, std::optional<BDominanceCertificate>> by_row;
  for (int x = 0; x < m.rows; ++x) {
    std::vector<int> row(m.r.begin() + static_cast<long>(x) * m.cols,
                         m.r.begin() + static_cast<long>(x + 1) * m.cols);
    auto cached = by_row.find(row);
    std::optional<BDominanceCertificate> cert;
    if (cached != by_row.end()) {
      cert = cached->second;
    } else {
      BDominanceCertificate c;
      c.player = i;
      c.info_set = p.info_set;
      c.own = p.own;
      c.opp = p.opp;
      bool dominated;
      if (opts.product_subsets) {
        std::vector<std::pair<std::vector<int>, int>> entries;
        dominated = ForEachProductSubset(comps, 20, [&](const std::vector<int>& cols) {
          int d = FirstWeakDominator(m, x, cols);
          if (d < 0) return false;
          std::vector<int> q;
          for (int y : cols) q.push_back(p.opp[y]);
          entries.emplace_back(q, p.own[d]);
          return true;
        });
        c.entries = entries;
      } else {
        PeelResult pr = PeelRow(m, x);
        dominated = pr.dominated;
        for (const auto& [d, dropped] : pr.chain) {
          std::vector<int> q;
          for (int y : dropped) q.push_back(p.opp[y]);
          c.chain.emplace_back(p.own[d], q);
        }
      }
      if (dominated) cert = c;
      by_row[row] = cert;
    }
    if (cert) {
      cert->strategy = p.own[x];
      res.dominated.push_back(p.own[x]);
      res.certificates[p.own[x]] = *cert;
    }
  }
  return res;
}

std::optional<std::pair<int, BDominanceCertificate>> ConditionallyBDominated(
    const StrategySpace& sp, int i, int s, const Restriction& r, const BOptions& opts) {
  CheckMember(r, i, s);
  for (int h : sp.OwnAllowedInfoSets(i, s)) {
    ConditionalProblem p = ReachingSets(sp, h, r);
    if (!p.Nonempty()) continue;
    BDominatedResult res = BDominatedSet(sp, i, p, opts);
    auto it = res.certificates.find(s);
    if (it != res.certificates.end()) return std::make_pair(h, it->second);
  }
  return std::nullopt;
}

std::vector<int> MaximalAdmissibleSubset(const StrategySpace& sp, int i, int s,
                                         const ConditionalProblem& p) {
  auto it = std::find(p.own.begin(), p.own.end(), s);
  if (it == p.own.end()) {
    Fail(ErrorCode::kStrategyNotInRestriction, "strategy not on the problem's own side");
  }
  RankMatrix m = ProblemMatrix(sp, i, p.own, p.opp);
  PeelResult pr = PeelRow(m, static_cast<int>(it - p.own.begin()));
  std::vector<int> out;
  for (int y : pr.admissible_cols) out.push_back(p.opp[y]);
  return out;
}

ReducedStrategy StrongReplacement(const StrategySpace& sp, int i, int h, const Restriction& r,
                                  int s, int s_prime) {
  ConditionalProblem p = ReachingSets(sp, h, r);
  if (sp.game().info_set(h).owner != i || !p.Nonempty()) {
    Fail(ErrorCode::kPreconditionViolated, "R^i(h) is empty or h is not owned by i");
  }
  if (!std::binary_search(p.own.begin(), p.own.end(), s) ||
      !std::binary_search(p.own.begin(), p.own.end(), s_prime)) {
    Fail(ErrorCode::kPreconditionViolated, "both strategies must lie in R_i(h)");
  }
  const DynamicGame& g = sp.game();
  const auto& a = sp.Strategy(i, s).choices;
  const auto& b = sp.Strategy(i, s_prime).choices;
  ReducedStrategy out;
  out.owner = i;
  for (int h2 : g.OwnInfoSets(i)) {
    // Reachable given the choices fixed so far (predecessors have lower ids).
    bool reachable = false;
    for (int x : g.info_set(h2).members) {
      bool ok = true;
      for (int y = x; g.history(y).parent >= 0 && ok; y = g.history(y).parent) {
        const History& par = g.history(g.history(y).parent);
        for (size_t k = 0; k < par.movers.size(); ++k) {
          if (par.movers[k].player != i) continue;
          auto it = out.choices.find(par.movers[k].info_set);
          if (it == out.choices.end() || it->second != g.history(y).incoming[k]) ok = false;
        }
      }
      if (ok) {
        reachable = true;
        break;
      }
    }
    if (!reachable) continue;
    const auto& src = sp.Follows(h, h2) ? b : a;
    auto it = src.find(h2);
    if (it == src.end()) {
      Fail(ErrorCode::kPreconditionViolated, "splice leaves an information set undefined");
    }
    out.choices[h2] = it->second;
  }
  int idx = sp.IndexOf(out);
  if (idx < 0 || !r.Contains(i, idx)) {
    Fail(ErrorCode::kPreconditionViolated, "spliced strategy is not in R_i");
  }
  return out;
}

DominanceWitness LiftWeakDominance(const StrategySpace& sp, int i, int h, const Restriction& r,
                                   int dominated, int dominator_at_h) {
  ConditionalProblem p = ReachingSets(sp, h, r);
  if (!p.Nonempty() || !std::binary_search(p.own.begin(), p.own.end(), dominated) ||
      !std::binary_search(p.own.begin(), p.own.end(), dominator_at_h)) {
    Fail(ErrorCode::kPreconditionViolated, "strategies must lie in a nonempty R^i(h)");
  }
  RankMatrix m = ProblemMatrix(sp, i, {dominator_at_h, dominated}, p.opp);
  if (!RowWeaklyDominates(m, 0, 1, AllCols(m.cols))) {
    Fail(ErrorCode::kPreconditionViolated, "no weak dominance at h");
  }
  ReducedStrategy star = StrongReplacement(sp, i, h, r, dominated, dominator_at_h);
  DominanceWitness w;
  w.player = i;
  w.dominated = dominated;
  w.dominator = sp.IndexOf(star);
  w.kind = DominanceKind::kWeak;
  w.info_set = -1;
  w.opp = RestrictedOpp(sp, i, r);
  if (!VerifyWitness(sp, w)) {
    Fail(ErrorCode::kPreconditionViolated, "lifted strategy does not dominate on R");
  }
  return w;
}

Restriction UOperator(const StrategySpace& sp, const Restriction& r, const BOptions& opts,
                      std::vector<UElimination>* eliminated) {
  Restriction out = r;
  for (int i = 0; i < sp.NumPlayers(); ++i) {
    std::map<int, UElimination> dead;
    for (int h : sp.game().OwnInfoSets(i)) {
      ConditionalProblem p = ReachingSets(sp, h, r);
      if (!p.Nonempty()) continue;
      BDominatedResult res = BDominatedSet(sp, i, p, opts);
      for (int s : res.dominated) {
        if (!dead.count(s)) dead[s] = {i, s, h, res.certificates.at(s)};
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

}  // namespace icbd
