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

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "icbd/errors.h"
#include "icbd/strategies.h"

namespace icbd {
namespace {

std::string JoinAlternatives(const BinaryAgenda& a, const std::vector<int>& ks) {
  std::string out = "{";
  for (size_t t = 0; t < ks.size(); ++t) {
    if (t > 0) out += ",";
    out += a.alternatives[ks[t]];
  }
  return out + "}";
}

void ValidatePrefs(const BinaryAgenda& a) {
  if (a.voters.empty() || a.voters.size() % 2 == 0) {
    Fail(ErrorCode::kEvenVoterCount,
         "voter count " + std::to_string(a.voters.size()) + " is not odd");
  }
  if (a.prefs.size() != a.voters.size()) {
    Fail(ErrorCode::kInvalidAgenda, "one preference list per voter is required");
  }
  const int k = static_cast<int>(a.alternatives.size());
  for (size_t v = 0; v < a.prefs.size(); ++v) {
    std::vector<int> sorted = a.prefs[v];
    std::sort(sorted.begin(), sorted.end());
    bool ok = static_cast<int>(sorted.size()) == k;
    for (int t = 0; ok && t < k; ++t) ok = sorted[t] == t;
    if (!ok) {
      Fail(ErrorCode::kIndifferenceFound,
           "voter " + a.voters[v] + " does not rank every alternative exactly once");
    }
  }
}

// Position of alternative k in voter v's ranking, 0 is best.
std::vector<std::vector<int>> Positions(const BinaryAgenda& a) {
  std::vector<std::vector<int>> pos(a.prefs.size(),
                                    std::vector<int>(a.alternatives.size(), 0));
  for (size_t v = 0; v < a.prefs.size(); ++v) {
    for (size_t t = 0; t < a.prefs[v].size(); ++t) pos[v][a.prefs[v][t]] = static_cast<int>(t);
  }
  return pos;
}

}  // namespace

void ValidateAgenda(const BinaryAgenda& a) {
  const int k = static_cast<int>(a.alternatives.size());
  if (k == 0) Fail(ErrorCode::kInvalidAgenda, "no alternatives");
  std::set<std::string> names;
  for (const auto& name : a.alternatives) {
    if (name.empty() || name.find('@') != std::string::npos) {
      Fail(ErrorCode::kInvalidAgenda, "bad alternative name '" + name + "'");
    }
    if (!names.insert(name).second) {
      Fail(ErrorCode::kInvalidAgenda, "duplicate alternative " + name);
    }
  }
  ValidatePrefs(a);
  const int n = static_cast<int>(a.nodes.size());
  if (a.root < 0 || a.root >= n) Fail(ErrorCode::kInvalidAgenda, "root out of range");
  std::vector<int> all(k);
  for (int t = 0; t < k; ++t) all[t] = t;
  if (a.nodes[a.root].alternatives != all) {
    Fail(ErrorCode::kInvalidAgenda, "the root must be labeled with every alternative");
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {a.root};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (seen[x]) Fail(ErrorCode::kInvalidAgenda, "node " + std::to_string(x) + " has two parents");
    seen[x] = true;
    const AgendaNode& node = a.nodes[x];
    std::vector<int> sorted = node.alternatives;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted != node.alternatives || sorted.empty() || sorted.front() < 0 ||
        sorted.back() >= k) {
      Fail(ErrorCode::kInvalidAgenda, "node " + std::to_string(x) + " has a bad label");
    }
    const bool leaf = node.left < 0 && node.right < 0;
    if (leaf) {
      if (node.alternatives.size() != 1) {
        Fail(ErrorCode::kInvalidAgenda,
             "leaf " + std::to_string(x) + " is labeled " + JoinAlternatives(a, node.alternatives));
      }
      continue;
    }
    if (node.left < 0 || node.right < 0 || node.left >= n || node.right >= n) {
      Fail(ErrorCode::kInvalidAgenda, "node " + std::to_string(x) + " needs two children");
    }
    const auto& l = a.nodes[node.left].alternatives;
    const auto& r = a.nodes[node.right].alternatives;
    std::vector<int> un;
    std::set_union(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(un));
    if (un != node.alternatives) {
      Fail(ErrorCode::kInvalidAgenda,
           "children of node " + std::to_string(x) + " do not cover its label");
    }
    if (l.size() >= node.alternatives.size() || r.size() >= node.alternatives.size()) {
      Fail(ErrorCode::kInvalidAgenda,
           "children of node " + std::to_string(x) + " must be proper subsets");
    }
    stack.push_back(node.left);
    stack.push_back(node.right);
  }
  for (int x = 0; x < n; ++x) {
    if (!seen[x]) Fail(ErrorCode::kInvalidAgenda, "node " + std::to_string(x) + " is unreachable");
  }
}

std::vector<std::vector<bool>> MajorityRelation(const BinaryAgenda& a) {
  ValidatePrefs(a);
  const int k = static_cast<int>(a.alternatives.size());
  const auto pos = Positions(a);
  const int need = static_cast<int>(a.voters.size()) / 2 + 1;
  std::vector<std::vector<bool>> beats(k, std::vector<bool>(k, false));
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x == y) continue;
      int count = 0;
      for (const auto& p : pos) count += p[x] < p[y] ? 1 : 0;
      beats[x][y] = count >= need;
    }
  }
  return beats;
}

AgendaGame AgendaToGame(const BinaryAgenda& a) {
  ValidateAgenda(a);
  const int num_voters = static_cast<int>(a.voters.size());
  GameBuilder b(a.voters);
  std::vector<std::vector<std::string>> labels_of(a.alternatives.size());

  std::function<int(int, const std::string&)> node;
  std::function<int(int, const std::string&, const std::string&)> vote;
  node = [&](int x, const std::string& path) {
    const AgendaNode& n = a.nodes[x];
    if (n.left < 0) {
      const int alt = n.alternatives.front();
      std::string label = a.alternatives[alt] + "@" + path;
      labels_of[alt].push_back(label);
      return b.Terminal(label);
    }
    return vote(x, path, "");
  };
  vote = [&](int x, const std::string& path, const std::string& votes) {
    const int k = static_cast<int>(votes.size());
    if (k == num_voters) {
      const int lefts = static_cast<int>(std::count(votes.begin(), votes.end(), 'l'));
      const std::string next = path.empty() ? votes : path + "/" + votes;
      return node(lefts * 2 > num_voters ? a.nodes[x].left : a.nodes[x].right, next);
    }
    int l = vote(x, path, votes + "l");
    int r = vote(x, path, votes + "r");
    return b.Decision(a.voters[k], "v" + path + "|" + votes, {"l", "r"}, {l, r});
  };
  const int root = node(a.root, "");

  for (int v = 0; v < num_voters; ++v) {
    std::vector<std::vector<std::string>> tiers;
    for (int alt : a.prefs[v]) {
      if (!labels_of[alt].empty()) tiers.push_back(labels_of[alt]);
    }
    b.Tiers(a.voters[v], std::move(tiers));
  }

  AgendaGame out{b.Build(root), {}};
  std::map<std::string, int> alt_index;
  for (size_t t = 0; t < a.alternatives.size(); ++t) alt_index[a.alternatives[t]] = static_cast<int>(t);
  for (int z = 0; z < out.game.NumTerminals(); ++z) {
    const std::string& label = out.game.TerminalLabel(z);
    out.alternative_of_terminal.push_back(alt_index.at(label.substr(0, label.find('@'))));
  }
  return out;
}

int SophisticatedOutcome(const BinaryAgenda& a) {
  ValidateAgenda(a);
  const auto beats = MajorityRelation(a);
  std::function<int(int)> value = [&](int x) {
    const AgendaNode& n = a.nodes[x];
    if (n.left < 0) return n.alternatives.front();
    const int l = value(n.left);
    const int r = value(n.right);
    if (l == r) return l;
    return beats[l][r] ? l : r;
  };
  return value(a.root);
}

AgendaReport AnalyzeAgenda(const BinaryAgenda& a, int64_t profile_cap) {
  AgendaReport report;
  report.sophisticated = SophisticatedOutcome(a);
  const AgendaGame ag = AgendaToGame(a);
  const BackwardInductionResult bi = BackwardInduction(ag.game);
  std::set<int> bi_alts;
  for (int z : bi.outcomes) bi_alts.insert(ag.alternative_of_terminal[z]);
  report.bi_alternatives.assign(bi_alts.begin(), bi_alts.end());
  report.tdi = !CheckTdiTree(ag.game).has_value();
  try {
    const StrategySpace sp(ag.game, profile_cap);
    const SolveResult r = Icbd(sp);
    std::set<int> alts;
    for (int z : r.outcomes) alts.insert(ag.alternative_of_terminal[z]);
    if (alts.size() == 1) {
      report.icbd_alternative = *alts.begin();
      report.icbd_status = "ok";
    } else {
      report.icbd_status = "icbd reaches " + std::to_string(alts.size()) + " alternatives";
    }
  } catch (const IcbdError& e) {
    if (e.code() != ErrorCode::kSizeCap) throw;
    report.icbd_status = e.what();
  }
  return report;
}

std::vector<BinaryAgenda> AllAgendaShapes(int k) {
  if (k < 1 || k > 5) Fail(ErrorCode::kPreconditionViolated, "agenda shapes need 1..5 alternatives");
  using Nodes = std::vector<AgendaNode>;  // root is the last node
  std::map<std::vector<int>, std::vector<Nodes>> memo;
  std::function<const std::vector<Nodes>&(const std::vector<int>&)> shapes;
  shapes = [&](const std::vector<int>& set) -> const std::vector<Nodes>& {
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    std::vector<Nodes> out;
    const int m = static_cast<int>(set.size());
    if (m == 1) {
      out.push_back({AgendaNode{set, -1, -1}});
    } else {
      std::vector<std::vector<int>> subsets;
      for (int mask = 1; mask + 1 < (1 << m); ++mask) {
        std::vector<int> sub;
        for (int t = 0; t < m; ++t) {
          if (mask & (1 << t)) sub.push_back(set[t]);
        }
        subsets.push_back(sub);
      }
      for (size_t p = 0; p < subsets.size(); ++p) {
        for (size_t q = p + 1; q < subsets.size(); ++q) {
          std::vector<int> un;
          std::set_union(subsets[p].begin(), subsets[p].end(), subsets[q].begin(),
                         subsets[q].end(), std::back_inserter(un));
          if (un != set) continue;
          const auto left = shapes(subsets[p]);
          const auto right = shapes(subsets[q]);
          for (const Nodes& l : left) {
            for (const Nodes& r : right) {
              Nodes combined = l;
              const int off = static_cast<int>(l.size());
              for (AgendaNode n : r) {
                if (n.left >= 0) n.left += off;
                if (n.right >= 0) n.right += off;
                combined.push_back(n);
              }
              combined.push_back(AgendaNode{set, off - 1, static_cast<int>(combined.size()) - 1});
              out.push_back(std::move(combined));
            }
          }
        }
      }
    }
    return memo[set] = std::move(out);
  };
  std::vector<int> all(k);
  std::vector<std::string> names;
  for (int t = 0; t < k; ++t) {
    all[t] = t;
    names.push_back(std::string(1, static_cast<char>('x' + t > 'z' ? 'a' + t : 'x' + t)));
  }
  std::vector<BinaryAgenda> agendas;
  for (const Nodes& nodes : shapes(all)) {
    BinaryAgenda a;
    a.alternatives = names;
    a.voters = {"v1"};
    a.prefs = {all};
    a.nodes = nodes;
    a.root = static_cast<int>(nodes.size()) - 1;
    agendas.push_back(std::move(a));
  }
  return agendas;
}

// ---------------------------------------------------------------------------

void ValidateBase(const MoneyBurnBaseGame& base) {
  const int na = static_cast<int>(base.actions_a.size());
  const int nb = static_cast<int>(base.actions_b.size());
  if (na < 2 || nb < 1) {
    Fail(ErrorCode::kPreconditionViolated, "Ann needs two actions and Bob one");
  }
  auto shape_ok = [&](const std::vector<std::vector<Rational>>& v) {
    if (static_cast<int>(v.size()) != na) return false;
    for (const auto& row : v) {
      if (static_cast<int>(row.size()) != nb) return false;
    }
    return true;
  };
  if (!shape_ok(base.v_a) || !shape_ok(base.v_b)) {
    Fail(ErrorCode::kPreconditionViolated, "payoff matrices must be |A_a| x |A_b|");
  }
  if (base.star_a < 0 || base.star_a >= na || base.star_b < 0 || base.star_b >= nb) {
    Fail(ErrorCode::kPreconditionViolated, "star profile out of range");
  }
  const Rational& top = base.v_a[base.star_a][base.star_b];
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      if ((x != base.star_a || y != base.star_b) && !(top > base.v_a[x][y])) {
        Fail(ErrorCode::kPreconditionViolated, "Ann's star payoff is not her unique maximum");
      }
    }
  }
  for (int y = 0; y < nb; ++y) {
    if (y != base.star_b && !(base.v_b[base.star_a][base.star_b] > base.v_b[base.star_a][y])) {
      Fail(ErrorCode::kPreconditionViolated, "Bob's star action is not his strict best reply");
    }
  }
}

Rational DeltaGap(const MoneyBurnBaseGame& base) {
  ValidateBase(base);
  const Rational& top = base.v_a[base.star_a][base.star_b];
  bool first = true;
  Rational delta;
  for (size_t x = 0; x < base.actions_a.size(); ++x) {
    if (static_cast<int>(x) == base.star_a) continue;
    for (const Rational& v : base.v_a[x]) {
      Rational gap = top - v;
      if (first || gap < delta) delta = gap;
      first = false;
    }
  }
  return delta;
}

Rational Spread(const MoneyBurnBaseGame& base) {
  ValidateBase(base);
  Rational lo = base.v_a[0][0];
  Rational hi = lo;
  for (const auto& row : base.v_a) {
    for (const Rational& v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return hi - lo;
}

int DefaultBudgetCap(const MoneyBurnBaseGame& base, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) Fail(ErrorCode::kPreconditionViolated, "epsilon must be positive");
  Rational q = Spread(base) / epsilon;
  q.canonicalize();
  mpz_class c = (q.get_num() + q.get_den() - 1) / q.get_den();
  return static_cast<int>(c.get_si()) + 1;
}

DynamicGame MoneyBurnGame(const MoneyBurnBaseGame& base, const MoneyBurnConfig& config) {
  if (sgn(config.epsilon) <= 0) Fail(ErrorCode::kPreconditionViolated, "epsilon must be positive");
  if (config.budget_cap < 1) Fail(ErrorCode::kPreconditionViolated, "budget cap must be at least 1");
  const Rational delta = DeltaGap(base);
  if (config.epsilon >= delta) {
    Fail(ErrorCode::kEpsilonTooLarge,
         "epsilon " + FormatRational(config.epsilon) + " is not below the gap " + FormatRational(delta));
  }
  GameBuilder b({"Ann", "Bob"});
  std::map<std::string, Rational> pay_a, pay_b;
  std::vector<int> stages;
  std::vector<std::string> burns;
  for (int n = 0; n <= config.budget_cap; ++n) {
    const std::string ns = std::to_string(n);
    std::vector<int> leaves;
    for (size_t x = 0; x < base.actions_a.size(); ++x) {
      for (size_t y = 0; y < base.actions_b.size(); ++y) {
        const std::string label = ns + ":" + base.actions_a[x] + ":" + base.actions_b[y];
        leaves.push_back(b.Terminal(label));
        pay_a[label] = base.v_a[x][y] - config.epsilon * n;
        pay_b[label] = base.v_b[x][y];
      }
    }
    stages.push_back(b.Decision({RawMove{"Ann", "a@" + ns, base.actions_a},
                                 RawMove{"Bob", "b@" + ns, base.actions_b}},
                                leaves));
    burns.push_back(ns);
  }
  const int root = b.Decision("Ann", "burn", burns, stages);
  b.Payoffs("Ann", pay_a);
  b.Payoffs("Bob", pay_b);
  return b.Build(root);
}

namespace {

int InfoSetByLabel(const DynamicGame& g, int owner, const std::string& label) {
  for (int h : g.OwnInfoSets(owner)) {
    if (g.info_set(h).label == label) return h;
  }
  return -1;
}

}  // namespace

MoneyBurnReport MoneyBurnSolve(const MoneyBurnBaseGame& base, const MoneyBurnConfig& config) {
  const DynamicGame g = MoneyBurnGame(base, config);
  const StrategySpace sp(g);
  MoneyBurnReport report;
  report.result = Icbd(sp);
  report.predicted_terminal = g.TerminalByLabel("0:" + base.actions_a[base.star_a] + ":" +
                                                base.actions_b[base.star_b]);
  report.outcome_matches = report.result.outcomes == std::vector<int>{report.predicted_terminal};

  const int levels = config.budget_cap + 1;
  const int na = static_cast<int>(base.actions_a.size());
  const int nb = static_cast<int>(base.actions_b.size());
  const int burn = InfoSetByLabel(g, 0, "burn");
  std::vector<int> info_a(levels), info_b(levels);
  for (int n = 0; n < levels; ++n) {
    info_a[n] = InfoSetByLabel(g, 0, "a@" + std::to_string(n));
    info_b[n] = InfoSetByLabel(g, 1, "b@" + std::to_string(n));
  }
  // Ann's strategies as (n, a_a), Bob's as one action per burn level.
  std::vector<std::pair<int, int>> ann(sp.NumStrategies(0));
  for (int s = 0; s < sp.NumStrategies(0); ++s) {
    const auto& c = sp.Strategy(0, s).choices;
    const int n = c.at(burn);
    ann[s] = {n, c.at(info_a[n])};
  }
  std::vector<std::vector<int>> bob(sp.NumStrategies(1), std::vector<int>(levels));
  for (int s = 0; s < sp.NumStrategies(1); ++s) {
    for (int n = 0; n < levels; ++n) bob[s][n] = sp.Strategy(1, s).choices.at(info_b[n]);
  }
  auto ann_index = [&](int n, int x) {
    for (int s = 0; s < static_cast<int>(ann.size()); ++s) {
      if (ann[s] == std::make_pair(n, x)) return s;
    }
    return -1;
  };
  auto v_a = [&](int n, int x, int y) -> Rational { return base.v_a[x][y] - config.epsilon * n; };

  std::vector<Restriction> snaps = {sp.Full()};
  for (const auto& it : report.result.trace.iterations) snaps.push_back(it.surviving);
  snaps.push_back(report.result.fixpoint);
  auto fail = [&](int l, const std::string& what) {
    report.claim_failures.push_back("level " + std::to_string(l) + ": " + what);
  };
  for (int l = 0; l < static_cast<int>(snaps.size()); ++l) {
    const Restriction& u = snaps[l];
    // Claim 1: Bob's survivors factor across burn levels.
    std::vector<std::set<int>> proj(levels);
    for (int s : u.sets[1]) {
      for (int n = 0; n < levels; ++n) proj[n].insert(bob[s][n]);
    }
    int64_t product = 1;
    for (const auto& p : proj) product *= static_cast<int64_t>(p.size());
    if (product != static_cast<int64_t>(u.sets[1].size())) {
      fail(l, "Bob's survivors are not a product over burn levels");
    }
    for (int n = 0; n < levels; ++n) {
      // Claim 2.
      if (u.Contains(0, ann_index(n, base.star_a)) && !proj[n].count(base.star_b)) {
        fail(l, "(" + std::to_string(n) + ", a*) survives without a*_b at level n");
      }
      // Claim 4.
      if (n + 1 < levels && !u.Contains(0, ann_index(n + 1, base.star_a))) {
        for (int x = 0; x < na; ++x) {
          if (x != base.star_a && u.Contains(0, ann_index(n, x))) {
            fail(l, "(" + std::to_string(n) + ", " + base.actions_a[x] + ") survives after (" +
                        std::to_string(n + 1) + ", a*) is gone");
          }
        }
      }
    }
    // Claim 3.
    if (l + 1 < static_cast<int>(snaps.size())) {
      for (int n = 0; n < levels; ++n) {
        const int s = ann_index(n, base.star_a);
        if (!u.Contains(0, s) || snaps[l + 1].Contains(0, s)) continue;
        const Rational target = v_a(n, base.star_a, base.star_b);
        bool found = false;
        for (int t : u.sets[0]) {
          bool all = true;
          for (int sb : u.sets[1]) {
            const auto [m, x] = ann[t];
            if (v_a(m, x, bob[sb][m]) < target) {
              all = false;
              break;
            }
          }
          if (all) {
            found = true;
            break;
          }
        }
        if (!found) fail(l, "no survivor guarantees the payoff of (" + std::to_string(n) + ", a*)");
      }
    }
  }
  (void)nb;
  return report;
}

MoneyBurnBaseGame RandomMoneyBurnBase(uint64_t seed, int actions_a, int actions_b,
                                      int max_payoff) {
  if (actions_a < 2 || actions_b < 1 || max_payoff < 1) {
    Fail(ErrorCode::kPreconditionViolated, "base game needs two Ann actions and a payoff range");
  }
  std::mt19937_64 rng(seed);
  const uint64_t range = static_cast<uint64_t>(max_payoff) + 1;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    MoneyBurnBaseGame base;
    for (int x = 0; x < actions_a; ++x) base.actions_a.push_back("a" + std::to_string(x));
    for (int y = 0; y < actions_b; ++y) base.actions_b.push_back("b" + std::to_string(y));
    base.v_a.assign(actions_a, std::vector<Rational>(actions_b));
    base.v_b.assign(actions_a, std::vector<Rational>(actions_b));
    for (int x = 0; x < actions_a; ++x) {
      for (int y = 0; y < actions_b; ++y) {
        base.v_a[x][y] = static_cast<long>(rng() % range);
        base.v_b[x][y] = static_cast<long>(rng() % range);
      }
    }
    int best = 0;
    for (int f = 1; f < actions_a * actions_b; ++f) {
      if (base.v_a[f / actions_b][f % actions_b] > base.v_a[best / actions_b][best % actions_b]) {
        best = f;
      }
    }
    base.star_a = best / actions_b;
    base.star_b = best % actions_b;
    try {
      ValidateBase(base);
      return base;
    } catch (const IcbdError&) {
    }
  }
  Fail(ErrorCode::kGenerationFailed, "no valid base game after 1000 draws");
}

}  // namespace icbd
