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

#include "icbd/oracle.h"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icbd/dominance.h"
#include "icbd/errors.h"
#include "icbd/witness.h"

namespace icbd {
namespace {

struct Problem {
  int h = -1;
  std::vector<int> own;
  std::vector<int> opp;
};

// R_i(h) and R_{-i}(h) straight from the reach tables.
Problem RawProblem(const StrategySpace& sp, int i, int h, const Restriction& r) {
  Problem p;
  p.h = h;
  for (int s : r.sets[i]) {
    if (sp.Reaches(i, s, h)) p.own.push_back(s);
  }
  for (int y = 0; y < sp.NumOpp(i); ++y) {
    if (!sp.OppReaches(h, y)) continue;
    const std::vector<int> prof = sp.OppProfile(i, y);
    bool in = true;
    for (int j = 0; j < sp.NumPlayers() && in; ++j) {
      if (j != i) in = std::find(r.sets[j].begin(), r.sets[j].end(), prof[j]) != r.sets[j].end();
    }
    if (in) p.opp.push_back(y);
  }
  return p;
}

// s is B-dominated on (own, opp): every nonempty Q has a weak dominator.
bool RawBDominated(const StrategySpace& sp, int i, int s, const Problem& p) {
  const int n = static_cast<int>(p.opp.size());
  if (n > kOracleOppCap) {
    Fail(ErrorCode::kSizeCap, "oracle problem has " + std::to_string(n) + " opponent profiles");
  }
  auto rank = [&](int t, int y) { return sp.game().Rank(i, sp.OutcomeOpp(i, t, y)); };
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool covered = false;
    for (int t : p.own) {
      if (t == s) continue;
      bool weak = true;
      bool strict = false;
      for (int k = 0; k < n && weak; ++k) {
        if (!(mask & (1u << k))) continue;
        const int a = rank(t, p.opp[k]);
        const int b = rank(s, p.opp[k]);
        if (a > b) weak = false;
        if (a < b) strict = true;
      }
      if (weak && strict) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

std::vector<Problem> Problems(const StrategySpace& sp, int i, const Restriction& r) {
  std::vector<Problem> out;
  for (int h : sp.game().OwnInfoSets(i)) {
    Problem p = RawProblem(sp, i, h, r);
    if (!p.own.empty() && !p.opp.empty()) out.push_back(std::move(p));
  }
  return out;
}

// Conditionally B-dominated, by definition.
bool RawCbd(const StrategySpace& sp, int i, int s, const std::vector<Problem>& problems) {
  for (const Problem& p : problems) {
    if (std::binary_search(p.own.begin(), p.own.end(), s) && RawBDominated(sp, i, s, p)) {
      return true;
    }
  }
  return false;
}

class Collector {
 public:
  void Add(size_t size, std::string what) { items_.emplace_back(size, std::move(what)); }
  void Finish(OracleReport& report) {
    std::stable_sort(items_.begin(), items_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [size, what] : items_) report.mismatches.push_back(std::move(what));
    report.ok = report.mismatches.empty();
  }

 private:
  std::vector<std::pair<size_t, std::string>> items_;
};

}  // namespace

OracleReport OracleCheck(const StrategySpace& sp, const Restriction& r, OracleLevel level,
                         const OracleHooks& hooks) {
  const DynamicGame& g = sp.game();
  OracleReport report;
  Collector found;
  auto who = [&](int i, int s) { return g.PlayerName(i) + " " + sp.Name(i, s); };

  if (level == OracleLevel::kDominance) {
    for (int i = 0; i < sp.NumPlayers(); ++i) {
      for (const Problem& p : Problems(sp, i, r)) {
        ConditionalProblem cp{i, p.h, p.own, p.opp};
        std::vector<int> solver = hooks.bd_set ? hooks.bd_set(sp, i, cp)
                                               : BDominatedSet(sp, i, cp).dominated;
        std::sort(solver.begin(), solver.end());
        for (int s : p.own) {
          const bool oracle = RawBDominated(sp, i, s, p);
          const bool mine = std::binary_search(solver.begin(), solver.end(), s);
          ++report.checked;
          if (oracle != mine) {
            found.Add(p.own.size() * p.opp.size(),
                      who(i, s) + " at " + g.info_set(p.h).label + ": definition says " +
                          (oracle ? "B-dominated" : "not B-dominated") + ", solver disagrees");
          }
        }
      }
      // Admissibility relative to the whole restriction.
      const std::vector<int> adm = AdmissibleSet(sp, i, r);
      for (int s : r.sets[i]) {
        bool dominated = false;
        for (int t : r.sets[i]) {
          if (t != s && WeaklyDominates(sp, i, t, s, r)) dominated = true;
        }
        // Weak dominance spelled out on the opponent profiles of R.
        bool raw = false;
        const Problem whole = [&] {
          Problem p;
          p.own = r.sets[i];
          for (int y = 0; y < sp.NumOpp(i); ++y) {
            const std::vector<int> prof = sp.OppProfile(i, y);
            bool in = true;
            for (int j = 0; j < sp.NumPlayers() && in; ++j) {
              if (j != i) in = std::find(r.sets[j].begin(), r.sets[j].end(), prof[j]) != r.sets[j].end();
            }
            if (in) p.opp.push_back(y);
          }
          return p;
        }();
        for (int t : whole.own) {
          if (t == s) continue;
          bool weak = true, strict = false;
          for (int y : whole.opp) {
            const int a = g.Rank(i, sp.OutcomeOpp(i, t, y));
            const int b = g.Rank(i, sp.OutcomeOpp(i, s, y));
            if (a > b) weak = false;
            if (a < b) strict = true;
          }
          if (weak && strict) raw = true;
        }
        const bool in_adm = std::binary_search(adm.begin(), adm.end(), s);
        ++report.checked;
        if (raw == in_adm || raw != dominated) {
          found.Add(whole.opp.size(), who(i, s) + ": admissibility disagrees with the definition");
        }
      }
    }
  } else if (level == OracleLevel::kIcbdStep) {
    Restriction expected = r;
    for (int i = 0; i < sp.NumPlayers(); ++i) {
      const std::vector<Problem> problems = Problems(sp, i, r);
      std::vector<int> keep;
      for (int s : r.sets[i]) {
        if (!RawCbd(sp, i, s, problems)) keep.push_back(s);
      }
      expected.sets[i] = keep;
    }
    const Restriction solver = hooks.u_operator ? hooks.u_operator(sp, r) : UOperator(sp, r);
    for (int i = 0; i < sp.NumPlayers(); ++i) {
      for (int s : r.sets[i]) {
        ++report.checked;
        const bool a = expected.Contains(i, s);
        const bool b = solver.Contains(i, s);
        if (a != b) {
          found.Add(static_cast<size_t>(sp.NumOpp(i)),
                    who(i, s) + ": definition says " + (a ? "survives" : "eliminated") +
                        ", operator says " + (b ? "survives" : "eliminated"));
        }
      }
    }
  } else {
    for (int i = 0; i < sp.NumPlayers(); ++i) {
      const std::vector<Problem> problems = Problems(sp, i, r);
      for (int s : r.sets[i]) {
        ++report.checked;
        const bool cbd = RawCbd(sp, i, s, problems);
        try {
          const RationalityCertificate c = ConstructSequentialWitness(sp, i, s, r);
          if (cbd) {
            found.Add(static_cast<size_t>(sp.NumOpp(i)),
                      who(i, s) + ": conditionally B-dominated yet a witness was built");
          } else if (!VerifyRationalityCertificate(sp, c)) {
            found.Add(static_cast<size_t>(sp.NumOpp(i)),
                      who(i, s) + ": constructed witness does not verify");
          }
        } catch (const IcbdError& e) {
          if (e.code() == ErrorCode::kHypothesisViolated && cbd) continue;
          found.Add(static_cast<size_t>(sp.NumOpp(i)),
                    who(i, s) + ": " + (cbd ? "wrong failure: " : "no witness: ") + e.what());
        }
      }
    }
  }
  found.Finish(report);
  return report;
}

}  // namespace icbd
