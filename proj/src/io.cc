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

#include "icbd/io.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "icbd/dominance.h"
#include "icbd/errors.h"
#include "json.hpp"

namespace icbd {
namespace {

using json = nlohmann::json;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    Fail(ErrorCode::kParseError, e.what());
  }
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void Schema(const std::string& path, const std::string& what) {
  Fail(ErrorCode::kSchemaError, (path.empty() ? std::string("/") : path) + ": " + what);
}

void ExpectObject(const json& j, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) Schema(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) Schema(path, "unknown field '" + key + "'");
  }
}

const json& Field(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) Schema(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string String(const json& j, const std::string& path) {
  if (!j.is_string()) Schema(path, "expected a string");
  return j.get<std::string>();
}

const json& Array(const json& j, const std::string& path) {
  if (!j.is_array()) Schema(path, "expected an array");
  return j;
}

std::vector<std::string> Strings(const json& j, const std::string& path) {
  std::vector<std::string> out;
  int k = 0;
  for (const auto& e : Array(j, path)) out.push_back(String(e, path + "/" + std::to_string(k++)));
  return out;
}

Rational Number(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) Schema(path, "expected a rational string \"p/q\"");
  try {
    return ParseRational(j.get<std::string>());
  } catch (const IcbdError& e) {
    Schema(path, e.what());
  }
}

void CheckVersion(const json& doc) {
  const json& v = Field(doc, "", "format_version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion) {
    Schema("/format_version", "unsupported format version");
  }
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += sep;
    out += parts[k];
  }
  return out;
}

int PlayerByName(const DynamicGame& g, const std::string& name, const std::string& path) {
  for (int i = 0; i < g.NumPlayers(); ++i) {
    if (g.PlayerName(i) == name) return i;
  }
  Schema(path, "unknown player '" + name + "'");
}

int StrategyByName(const StrategySpace& sp, int i, const std::string& name,
                   const std::string& path) {
  int s = sp.Find(i, name);
  if (s < 0) Schema(path, "unknown strategy '" + name + "' of " + sp.game().PlayerName(i));
  return s;
}

int OwnInfoSetByLabel(const DynamicGame& g, int i, const std::string& label,
                      const std::string& path) {
  for (int h : g.OwnInfoSets(i)) {
    if (g.info_set(h).label == label) return h;
  }
  Schema(path, "unknown information set '" + label + "' of " + g.PlayerName(i));
}

// Opponent profiles named by the strategies of players j != i in increasing
// order, joined with ",".
class OppNames {
 public:
  OppNames(const StrategySpace& sp, int i) : sp_(sp), i_(i) {
    for (int y = 0; y < sp.NumOpp(i); ++y) {
      std::vector<int> p = sp.OppProfile(i, y);
      std::vector<std::string> parts;
      for (int j = 0; j < sp.NumPlayers(); ++j) {
        if (j != i) parts.push_back(sp.Name(j, p[j]));
      }
      names_.push_back(Join(parts, ","));
      index_[names_.back()] = y;
    }
  }
  const std::string& Name(int y) const { return names_[y]; }
  int Index(const std::string& name, const std::string& path) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      Schema(path, "unknown opponent profile '" + name + "' for " + sp_.game().PlayerName(i_));
    }
    return it->second;
  }
  json Names(const std::vector<int>& ys) const {
    json out = json::array();
    for (int y : ys) out.push_back(names_[y]);
    return out;
  }
  std::vector<int> Indices(const json& j, const std::string& path) const {
    std::vector<int> out;
    int k = 0;
    for (const auto& e : Array(j, path)) {
      const std::string p = path + "/" + std::to_string(k++);
      out.push_back(Index(String(e, p), p));
    }
    return out;
  }

 private:
  const StrategySpace& sp_;
  int i_;
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

json RestrictionJson(const StrategySpace& sp, const Restriction& r) {
  json out = json::object();
  for (int i = 0; i < sp.NumPlayers(); ++i) {
    json names = json::array();
    for (int s : r.sets[i]) names.push_back(sp.Name(i, s));
    out[sp.game().PlayerName(i)] = names;
  }
  return out;
}

Restriction RestrictionFrom(const StrategySpace& sp, const json& j, const std::string& path) {
  if (!j.is_object()) Schema(path, "expected an object");
  Restriction r = sp.Full();
  for (const auto& [name, list] : j.items()) {
    const std::string p = path + "/" + name;
    const int i = PlayerByName(sp.game(), name, p);
    std::set<int> chosen;
    int k = 0;
    for (const auto& e : Array(list, p)) {
      const std::string q = p + "/" + std::to_string(k++);
      chosen.insert(StrategyByName(sp, i, String(e, q), q));
    }
    if (chosen.empty()) Schema(p, "a restriction factor must be nonempty");
    r.sets[i].assign(chosen.begin(), chosen.end());
  }
  return r;
}

json UtilityJson(const DynamicGame& g, const UtilityFunction& u) {
  json out = json::object();
  for (int z = 0; z < g.NumTerminals(); ++z) out[g.TerminalLabel(z)] = FormatRational(u(z));
  return out;
}

UtilityFunction UtilityFrom(const DynamicGame& g, int i, const json& j, const std::string& path) {
  if (!j.is_object()) Schema(path, "expected an object");
  UtilityFunction u;
  u.owner = i;
  u.values.assign(g.NumTerminals(), Rational(0));
  std::vector<bool> seen(g.NumTerminals(), false);
  for (const auto& [label, v] : j.items()) {
    const std::string p = path + "/" + label;
    const int z = g.TerminalByLabel(label);
    if (z < 0) Schema(p, "unknown outcome '" + label + "'");
    u.values[z] = Number(v, p);
    seen[z] = true;
  }
  for (int z = 0; z < g.NumTerminals(); ++z) {
    if (!seen[z]) Schema(path, "missing outcome '" + g.TerminalLabel(z) + "'");
  }
  return u;
}

json CertificateJson(const StrategySpace& sp, const RationalityCertificate& c) {
  const DynamicGame& g = sp.game();
  const OppNames opp(sp, c.player);
  json cps = json::object();
  for (const auto& [key, m] : c.cps.measures) {
    json measure = json::object();
    for (const auto& [y, w] : m) measure[opp.Name(y)] = FormatRational(w);
    cps[key == kWholeSpace ? std::string("*") : g.info_set(key).label] = measure;
  }
  json out;
  out["player"] = g.PlayerName(c.player);
  out["strategy"] = sp.Name(c.player, c.strategy);
  out["restriction"] = RestrictionJson(sp, c.restriction);
  out["utility"] = UtilityJson(g, c.utility);
  out["cps"] = cps;
  out["cautious"] = c.cautious;
  out["strict_origin"] = c.strict_origin;
  return out;
}

RationalityCertificate CertificateFrom(const StrategySpace& sp, const json& j,
                                       const std::string& path) {
  ExpectObject(j, path, {"format_version", "player", "strategy", "restriction", "utility", "cps",
                         "cautious", "strict_origin"});
  const DynamicGame& g = sp.game();
  RationalityCertificate c;
  c.player = PlayerByName(g, String(Field(j, path, "player"), path + "/player"), path + "/player");
  c.strategy = StrategyByName(sp, c.player, String(Field(j, path, "strategy"), path + "/strategy"),
                              path + "/strategy");
  c.restriction = RestrictionFrom(sp, Field(j, path, "restriction"), path + "/restriction");
  c.utility = UtilityFrom(g, c.player, Field(j, path, "utility"), path + "/utility");
  c.cps.owner = c.player;
  const OppNames opp(sp, c.player);
  const json& cps = Field(j, path, "cps");
  if (!cps.is_object()) Schema(path + "/cps", "expected an object");
  for (const auto& [label, m] : cps.items()) {
    const std::string p = path + "/cps/" + label;
    const int key = label == "*" ? kWholeSpace : OwnInfoSetByLabel(g, c.player, label, p);
    if (!m.is_object()) Schema(p, "expected an object");
    Measure measure;
    for (const auto& [name, w] : m.items()) measure[opp.Index(name, p + "/" + name)] = Number(w, p);
    c.cps.measures[key] = measure;
  }
  const json& cautious = Field(j, path, "cautious");
  const json& strict = Field(j, path, "strict_origin");
  if (!cautious.is_boolean() || !strict.is_boolean()) Schema(path, "flags must be booleans");
  c.cautious = cautious.get<bool>();
  c.strict_origin = strict.get<bool>();
  return c;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kParseError, "cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------
// Games.

DynamicGame ParseGame(std::string_view text) {
  const json doc = ParseJson(text);
  ExpectObject(doc, "", {"format_version", "players", "tree", "terminals", "preferences"});
  CheckVersion(doc);
  RawGame raw;
  raw.players = Strings(Field(doc, "", "players"), "/players");
  if (raw.players.empty()) Schema("/players", "at least one player is required");
  std::set<std::string> player_set(raw.players.begin(), raw.players.end());
  if (player_set.size() != raw.players.size()) Schema("/players", "duplicate player");

  std::vector<std::string> outcomes;
  std::function<std::string(const json&, const std::string&)> node =
      [&](const json& j, const std::string& path) {
        if (!j.is_object()) Schema(path, "expected a node object");
        const size_t index = raw.nodes.size();
        raw.nodes.push_back(RawNode{"n" + std::to_string(index), {}, {}, ""});
        if (j.contains("outcome")) {
          ExpectObject(j, path, {"outcome"});
          const std::string label = String(j["outcome"], path + "/outcome");
          if (label.empty()) Schema(path + "/outcome", "empty outcome label");
          raw.nodes[index].outcome = label;
          outcomes.push_back(label);
          return raw.nodes[index].name;
        }
        ExpectObject(j, path, {"movers", "children"});
        const json& movers = Array(Field(j, path, "movers"), path + "/movers");
        if (movers.empty()) Schema(path + "/movers", "a decision node needs a mover");
        std::vector<RawMove> moves;
        for (size_t k = 0; k < movers.size(); ++k) {
          const std::string p = path + "/movers/" + std::to_string(k);
          ExpectObject(movers[k], p, {"player", "info_set", "actions"});
          RawMove m;
          m.player = String(Field(movers[k], p, "player"), p + "/player");
          if (!player_set.count(m.player)) Schema(p + "/player", "unknown player '" + m.player + "'");
          m.info_set = String(Field(movers[k], p, "info_set"), p + "/info_set");
          m.actions = Strings(Field(movers[k], p, "actions"), p + "/actions");
          if (m.actions.empty()) Schema(p + "/actions", "no actions");
          for (const auto& a : m.actions) {
            if (a.empty() || a.find(',') != std::string::npos) {
              Schema(p + "/actions", "action labels must be nonempty and free of ','");
            }
          }
          moves.push_back(std::move(m));
        }
        const json& children = Field(j, path, "children");
        if (!children.is_object()) Schema(path + "/children", "expected an object");
        size_t total = 1;
        for (const auto& m : moves) total *= m.actions.size();
        if (children.size() != total) {
          Schema(path + "/children", "expected " + std::to_string(total) + " children");
        }
        raw.nodes[index].moves = moves;
        std::vector<size_t> digit(moves.size(), 0);
        std::vector<std::string> names;
        for (size_t c = 0; c < total; ++c) {
          std::vector<std::string> parts;
          for (size_t k = 0; k < moves.size(); ++k) parts.push_back(moves[k].actions[digit[k]]);
          const std::string key = Join(parts, ",");
          auto it = children.find(key);
          if (it == children.end()) Schema(path + "/children", "missing child '" + key + "'");
          names.push_back(node(*it, path + "/children/" + key));
          for (size_t k = moves.size(); k-- > 0;) {
            if (++digit[k] < moves[k].actions.size()) break;
            digit[k] = 0;
          }
        }
        raw.nodes[index].children = names;
        return raw.nodes[index].name;
      };
  raw.root = node(Field(doc, "", "tree"), "/tree");

  std::vector<std::string> listed = Strings(Field(doc, "", "terminals"), "/terminals");
  std::vector<std::string> found = outcomes;
  std::sort(listed.begin(), listed.end());
  std::sort(found.begin(), found.end());
  if (listed != found) Schema("/terminals", "does not match the outcomes of the tree");

  const json& prefs = Field(doc, "", "preferences");
  if (!prefs.is_object()) Schema("/preferences", "expected an object");
  for (const auto& [name, v] : prefs.items()) {
    if (!player_set.count(name)) Schema("/preferences/" + name, "unknown player");
  }
  for (const auto& name : raw.players) {
    const std::string p = "/preferences/" + name;
    const json& tiers = Array(Field(prefs, "/preferences", name.c_str()), p);
    std::vector<std::vector<std::string>> t;
    int k = 0;
    for (const auto& tier : tiers) {
      t.push_back(Strings(tier, p + "/" + std::to_string(k++)));
    }
    raw.preferences.push_back(std::move(t));
  }
  return ValidateGame(raw);
}

std::string SerializeGame(const DynamicGame& g) {
  std::function<json(int)> node = [&](int x) {
    const History& h = g.history(x);
    json out;
    if (h.terminal >= 0) {
      out["outcome"] = g.TerminalLabel(h.terminal);
      return out;
    }
    json movers = json::array();
    for (const Move& m : h.movers) {
      const InformationSet& is = g.info_set(m.info_set);
      movers.push_back({{"player", g.PlayerName(m.player)},
                        {"info_set", is.label},
                        {"actions", is.actions}});
    }
    json children = json::object();
    for (int c : h.children) {
      std::vector<std::string> parts;
      const History& ch = g.history(c);
      for (size_t k = 0; k < h.movers.size(); ++k) {
        parts.push_back(g.info_set(h.movers[k].info_set).actions[ch.incoming[k]]);
      }
      children[Join(parts, ",")] = node(c);
    }
    out["movers"] = movers;
    out["children"] = children;
    return out;
  };
  json doc;
  doc["format_version"] = kFormatVersion;
  json players = json::array();
  for (int i = 0; i < g.NumPlayers(); ++i) players.push_back(g.PlayerName(i));
  doc["players"] = players;
  doc["tree"] = node(g.root());
  json terminals = json::array();
  for (int z = 0; z < g.NumTerminals(); ++z) terminals.push_back(g.TerminalLabel(z));
  doc["terminals"] = terminals;
  json prefs = json::object();
  for (int i = 0; i < g.NumPlayers(); ++i) {
    json tiers = json::array();
    for (int r = 0; r <= g.MaxRank(i); ++r) {
      json tier = json::array();
      for (int z = 0; z < g.NumTerminals(); ++z) {
        if (g.Rank(i, z) == r) tier.push_back(g.TerminalLabel(z));
      }
      tiers.push_back(tier);
    }
    prefs[g.PlayerName(i)] = tiers;
  }
  doc["preferences"] = prefs;
  return Dump(doc);
}

// ---------------------------------------------------------------------------
// Agendas.

BinaryAgenda ParseAgenda(std::string_view text) {
  const json doc = ParseJson(text);
  ExpectObject(doc, "", {"format_version", "alternatives", "voters", "preferences", "agenda"});
  CheckVersion(doc);
  BinaryAgenda a;
  a.alternatives = Strings(Field(doc, "", "alternatives"), "/alternatives");
  a.voters = Strings(Field(doc, "", "voters"), "/voters");
  std::map<std::string, int> alt;
  for (size_t k = 0; k < a.alternatives.size(); ++k) alt[a.alternatives[k]] = static_cast<int>(k);
  auto index = [&](const std::string& name, const std::string& path) {
    auto it = alt.find(name);
    if (it == alt.end()) Schema(path, "unknown alternative '" + name + "'");
    return it->second;
  };
  const json& prefs = Field(doc, "", "preferences");
  if (!prefs.is_object()) Schema("/preferences", "expected an object");
  for (const auto& [name, v] : prefs.items()) {
    if (std::find(a.voters.begin(), a.voters.end(), name) == a.voters.end()) {
      Schema("/preferences/" + name, "unknown voter");
    }
  }
  for (const auto& v : a.voters) {
    const std::string p = "/preferences/" + v;
    std::vector<int> order;
    for (const auto& name : Strings(Field(prefs, "/preferences", v.c_str()), p)) {
      order.push_back(index(name, p));
    }
    a.prefs.push_back(order);
  }
  std::function<int(const json&, const std::string&)> node = [&](const json& j,
                                                                 const std::string& path) {
    ExpectObject(j, path, {"alternatives", "left", "right"});
    AgendaNode n;
    for (const auto& name : Strings(Field(j, path, "alternatives"), path + "/alternatives")) {
      n.alternatives.push_back(index(name, path + "/alternatives"));
    }
    std::sort(n.alternatives.begin(), n.alternatives.end());
    const int id = static_cast<int>(a.nodes.size());
    a.nodes.push_back(n);
    const bool has_left = j.contains("left");
    const bool has_right = j.contains("right");
    if (has_left != has_right) Schema(path, "a split needs both 'left' and 'right'");
    if (has_left) {
      const int l = node(j["left"], path + "/left");
      const int r = node(j["right"], path + "/right");
      a.nodes[id].left = l;
      a.nodes[id].right = r;
    }
    return id;
  };
  a.root = node(Field(doc, "", "agenda"), "/agenda");
  ValidateAgenda(a);
  return a;
}

std::string SerializeAgenda(const BinaryAgenda& a) {
  std::function<json(int)> node = [&](int x) {
    json out;
    json names = json::array();
    for (int k : a.nodes[x].alternatives) names.push_back(a.alternatives[k]);
    out["alternatives"] = names;
    if (a.nodes[x].left >= 0) {
      out["left"] = node(a.nodes[x].left);
      out["right"] = node(a.nodes[x].right);
    }
    return out;
  };
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["alternatives"] = a.alternatives;
  doc["voters"] = a.voters;
  json prefs = json::object();
  for (size_t v = 0; v < a.voters.size(); ++v) {
    json order = json::array();
    for (int k : a.prefs[v]) order.push_back(a.alternatives[k]);
    prefs[a.voters[v]] = order;
  }
  doc["preferences"] = prefs;
  doc["agenda"] = node(a.root);
  return Dump(doc);
}

// ---------------------------------------------------------------------------
// Money-burning base games.

MoneyBurnBaseGame ParseBaseGame(std::string_view text) {
  const json doc = ParseJson(text);
  ExpectObject(doc, "", {"format_version", "actions_a", "actions_b", "v_a", "v_b", "star"});
  CheckVersion(doc);
  MoneyBurnBaseGame b;
  b.actions_a = Strings(Field(doc, "", "actions_a"), "/actions_a");
  b.actions_b = Strings(Field(doc, "", "actions_b"), "/actions_b");
  auto matrix = [&](const char* key) {
    const std::string path = std::string("/") + key;
    std::vector<std::vector<Rational>> m;
    const json& rows = Array(Field(doc, "", key), path);
    if (rows.size() != b.actions_a.size()) Schema(path, "one row per Ann action is required");
    for (size_t x = 0; x < rows.size(); ++x) {
      const std::string p = path + "/" + std::to_string(x);
      const json& row = Array(rows[x], p);
      if (row.size() != b.actions_b.size()) Schema(p, "one entry per Bob action is required");
      std::vector<Rational> v;
      for (size_t y = 0; y < row.size(); ++y) v.push_back(Number(row[y], p + "/" + std::to_string(y)));
      m.push_back(v);
    }
    return m;
  };
  b.v_a = matrix("v_a");
  b.v_b = matrix("v_b");
  const std::vector<std::string> star = Strings(Field(doc, "", "star"), "/star");
  if (star.size() != 2) Schema("/star", "expected [Ann action, Bob action]");
  auto find = [](const std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
  };
  b.star_a = find(b.actions_a, star[0]);
  b.star_b = find(b.actions_b, star[1]);
  if (b.star_a < 0 || b.star_b < 0) Schema("/star", "unknown action");
  ValidateBase(b);
  return b;
}

std::string SerializeBaseGame(const MoneyBurnBaseGame& base) {
  auto matrix = [](const std::vector<std::vector<Rational>>& m) {
    json out = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (const auto& v : row) r.push_back(FormatRational(v));
      out.push_back(r);
    }
    return out;
  };
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["actions_a"] = base.actions_a;
  doc["actions_b"] = base.actions_b;
  doc["v_a"] = matrix(base.v_a);
  doc["v_b"] = matrix(base.v_b);
  doc["star"] = {base.actions_a[base.star_a], base.actions_b[base.star_b]};
  return Dump(doc);
}

// ---------------------------------------------------------------------------
// Restrictions, utilities and certificates.

Restriction ParseRestriction(const StrategySpace& sp, std::string_view text) {
  const json doc = ParseJson(text);
  ExpectObject(doc, "", {"format_version", "restriction"});
  CheckVersion(doc);
  return RestrictionFrom(sp, Field(doc, "", "restriction"), "/restriction");
}

std::string SerializeRestriction(const StrategySpace& sp, const Restriction& r) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["restriction"] = RestrictionJson(sp, r);
  return Dump(doc);
}

std::vector<UtilityFunction> ParseUtilities(const DynamicGame& g, std::string_view text) {
  const json doc = ParseJson(text);
  ExpectObject(doc, "", {"format_version", "utilities"});
  CheckVersion(doc);
  const json& u = Field(doc, "", "utilities");
  if (!u.is_object()) Schema("/utilities", "expected an object");
  for (const auto& [name, v] : u.items()) PlayerByName(g, name, "/utilities/" + name);
  std::vector<UtilityFunction> out;
  for (int i = 0; i < g.NumPlayers(); ++i) {
    const std::string& name = g.PlayerName(i);
    out.push_back(UtilityFrom(g, i, Field(u, "/utilities", name.c_str()), "/utilities/" + name));
  }
  return out;
}

std::string SerializeUtilities(const DynamicGame& g, const std::vector<UtilityFunction>& u) {
  json doc;
  doc["format_version"] = kFormatVersion;
  json all = json::object();
  for (const auto& f : u) all[g.PlayerName(f.owner)] = UtilityJson(g, f);
  doc["utilities"] = all;
  return Dump(doc);
}

std::string SerializeCertificate(const StrategySpace& sp, const RationalityCertificate& c) {
  json doc = CertificateJson(sp, c);
  doc["format_version"] = kFormatVersion;
  return Dump(doc);
}

RationalityCertificate ParseCertificate(const StrategySpace& sp, std::string_view text) {
  const json doc = ParseJson(text);
  CheckVersion(doc);
  return CertificateFrom(sp, doc, "");
}

// ---------------------------------------------------------------------------
// Traces.

std::string SerializeTrace(const StrategySpace& sp, const std::string& method,
                           const SolveResult& result,
                           const std::vector<UtilityFunction>& utilities) {
  const DynamicGame& g = sp.game();
  auto info_label = [&](int h) -> json {
    if (h < 0) return nullptr;
    return g.info_set(h).label;
  };
  json iterations = json::array();
  for (const auto& it : result.trace.iterations) {
    json eliminated = json::array();
    for (const auto& rec : it.eliminated) {
      const int i = rec.player;
      const OppNames opp(sp, i);
      json e;
      e["player"] = g.PlayerName(i);
      e["strategy"] = sp.Name(i, rec.strategy);
      e["info_set"] = info_label(rec.info_set);
      e["dominator"] = rec.dominator < 0 ? json(nullptr) : json(sp.Name(i, rec.dominator));
      if (rec.certificate) {
        const BDominanceCertificate& c = *rec.certificate;
        json own = json::array();
        for (int s : c.own) own.push_back(sp.Name(i, s));
        json chain = json::array();
        for (const auto& [row, dropped] : c.chain) {
          chain.push_back({{"row", sp.Name(i, row)}, {"dropped", opp.Names(dropped)}});
        }
        json entries = json::array();
        for (const auto& [q, d] : c.entries) {
          entries.push_back({{"opp", opp.Names(q)}, {"dominator", sp.Name(i, d)}});
        }
        e["b_certificate"] = {{"own", own}, {"opp", opp.Names(c.opp)}, {"chain", chain},
                              {"entries", entries}};
      }
      if (rec.witness) {
        const DominanceWitness& w = *rec.witness;
        e["witness"] = {{"dominator", sp.Name(i, w.dominator)},
                        {"kind", w.kind == DominanceKind::kStrict ? "strict" : "weak"},
                        {"info_set", info_label(w.info_set)},
                        {"opp", opp.Names(w.opp)}};
      }
      if (rec.mixture) {
        json m = json::object();
        for (const auto& [s, w] : rec.mixture->weights) m[sp.Name(i, s)] = FormatRational(w);
        e["mixture"] = m;
      }
      eliminated.push_back(e);
    }
    iterations.push_back({{"eliminated", eliminated},
                          {"surviving", RestrictionJson(sp, it.surviving)}});
  }
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["method"] = method;
  doc["iterations"] = iterations;
  doc["iterations_to_fixpoint"] = result.iterations_to_fixpoint;
  doc["fixpoint"] = RestrictionJson(sp, result.fixpoint);
  json outcomes = json::array();
  for (int z : result.outcomes) outcomes.push_back(g.TerminalLabel(z));
  doc["outcomes"] = outcomes;
  if (!utilities.empty()) {
    json all = json::object();
    for (const auto& f : utilities) all[g.PlayerName(f.owner)] = UtilityJson(g, f);
    doc["utilities"] = all;
  }
  json certs = json::array();
  for (const auto& [key, c] : result.certificates) certs.push_back(CertificateJson(sp, c));
  doc["certificates"] = certs;
  return Dump(doc);
}

TraceReplayReport ReplayTrace(const StrategySpace& sp, std::string_view text) {
  const json doc = ParseJson(text);
  ExpectObject(doc, "", {"format_version", "method", "iterations", "iterations_to_fixpoint",
                         "fixpoint", "outcomes", "utilities", "certificates"});
  CheckVersion(doc);
  const DynamicGame& g = sp.game();
  TraceReplayReport report;
  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };
  std::vector<UtilityFunction> utilities;
  if (doc.contains("utilities")) {
    const json& u = doc["utilities"];
    if (!u.is_object()) Schema("/utilities", "expected an object");
    for (int i = 0; i < g.NumPlayers(); ++i) {
      const std::string& name = g.PlayerName(i);
      utilities.push_back(UtilityFrom(g, i, Field(u, "/utilities", name.c_str()), "/utilities/" + name));
    }
  }
  Restriction prev = sp.Full();
  const json& iterations = Array(Field(doc, "", "iterations"), "/iterations");
  for (size_t k = 0; k < iterations.size(); ++k) {
    const std::string path = "/iterations/" + std::to_string(k);
    const json& it = iterations[k];
    ExpectObject(it, path, {"eliminated", "surviving"});
    Restriction expected = prev;
    const json& eliminated = Array(Field(it, path, "eliminated"), path + "/eliminated");
    for (size_t e = 0; e < eliminated.size(); ++e) {
      const std::string p = path + "/eliminated/" + std::to_string(e);
      const json& rec = eliminated[e];
      ExpectObject(rec, p, {"player", "strategy", "info_set", "dominator", "b_certificate",
                            "witness", "mixture"});
      const int i = PlayerByName(g, String(Field(rec, p, "player"), p), p + "/player");
      const int s = StrategyByName(sp, i, String(Field(rec, p, "strategy"), p), p + "/strategy");
      const OppNames opp(sp, i);
      const json& hj = Field(rec, p, "info_set");
      const int h = hj.is_null() ? -1 : OwnInfoSetByLabel(g, i, String(hj, p), p + "/info_set");
      const std::string who = g.PlayerName(i) + " " + sp.Name(i, s) + " in round " +
                              std::to_string(k + 1);
      if (!prev.Contains(i, s)) fail(who + ": not in the restriction it was removed from");
      auto& set = expected.sets[i];
      set.erase(std::remove(set.begin(), set.end(), s), set.end());
      // The conditional problem the reason refers to.
      ConditionalProblem problem;
      if (h >= 0) {
        problem = ReachingSets(sp, h, prev);
      } else {
        problem.own = prev.sets[i];
        problem.opp = RestrictedOpp(sp, i, prev);
      }
      bool reason = false;
      if (rec.contains("b_certificate")) {
        reason = true;
        const json& cj = rec["b_certificate"];
        const std::string q = p + "/b_certificate";
        ExpectObject(cj, q, {"own", "opp", "chain", "entries"});
        BDominanceCertificate c;
        c.player = i;
        c.strategy = s;
        c.info_set = h;
        int n = 0;
        for (const auto& name : Array(Field(cj, q, "own"), q + "/own")) {
          c.own.push_back(StrategyByName(sp, i, String(name, q), q + "/own/" + std::to_string(n++)));
        }
        c.opp = opp.Indices(Field(cj, q, "opp"), q + "/opp");
        for (const auto& step : Array(Field(cj, q, "chain"), q + "/chain")) {
          ExpectObject(step, q + "/chain", {"row", "dropped"});
          c.chain.emplace_back(
              StrategyByName(sp, i, String(Field(step, q, "row"), q), q + "/chain"),
              opp.Indices(Field(step, q, "dropped"), q + "/chain"));
        }
        for (const auto& entry : Array(Field(cj, q, "entries"), q + "/entries")) {
          ExpectObject(entry, q + "/entries", {"opp", "dominator"});
          c.entries.emplace_back(
              opp.Indices(Field(entry, q, "opp"), q + "/entries"),
              StrategyByName(sp, i, String(Field(entry, q, "dominator"), q), q + "/entries"));
        }
        if (c.own != problem.own || c.opp != problem.opp) {
          fail(who + ": certificate is not stated on the conditional problem");
        } else if (!VerifyCertificate(sp, c)) {
          fail(who + ": B-dominance certificate does not verify");
        }
        ++report.checked;
      }
      if (rec.contains("witness")) {
        reason = true;
        const json& wj = rec["witness"];
        const std::string q = p + "/witness";
        ExpectObject(wj, q, {"dominator", "kind", "info_set", "opp"});
        DominanceWitness w;
        w.player = i;
        w.dominated = s;
        w.dominator = StrategyByName(sp, i, String(Field(wj, q, "dominator"), q), q + "/dominator");
        w.kind = String(Field(wj, q, "kind"), q) == "strict" ? DominanceKind::kStrict
                                                              : DominanceKind::kWeak;
        const json& wh = Field(wj, q, "info_set");
        w.info_set = wh.is_null() ? -1 : OwnInfoSetByLabel(g, i, String(wh, q), q + "/info_set");
        w.opp = opp.Indices(Field(wj, q, "opp"), q + "/opp");
        if (!prev.Contains(i, w.dominator) || !VerifyWitness(sp, w)) {
          fail(who + ": dominance witness does not verify");
        }
        ++report.checked;
      }
      if (rec.contains("mixture")) {
        reason = true;
        const json& mj = rec["mixture"];
        if (utilities.empty()) {
          fail(who + ": mixture recorded without utilities");
        } else if (!mj.is_object()) {
          Schema(p + "/mixture", "expected an object");
        } else {
          std::map<int, Rational> sigma;
          Rational total = 0;
          bool ok = true;
          for (const auto& [name, w] : mj.items()) {
            const int t = StrategyByName(sp, i, name, p + "/mixture/" + name);
            sigma[t] = Number(w, p + "/mixture/" + name);
            total += sigma[t];
            if (sigma[t] < 0 || !std::binary_search(problem.own.begin(), problem.own.end(), t)) {
              ok = false;
            }
          }
          ok = ok && total == 1;
          const UtilityFunction& u = utilities[i];
          for (int y : problem.opp) {
            Rational eu = 0;
            for (const auto& [t, w] : sigma) eu += w * u(sp.OutcomeOpp(i, t, y));
            if (!(eu > u(sp.OutcomeOpp(i, s, y)))) ok = false;
          }
          if (!ok) fail(who + ": mixture does not strictly dominate");
        }
        ++report.checked;
      }
      if (!reason) {
        const json& dj = Field(rec, p, "dominator");
        if (dj.is_null()) {
          fail(who + ": no recorded reason");
        } else {
          const int t = StrategyByName(sp, i, String(dj, p), p + "/dominator");
          if (!prev.Contains(i, t) || !WeaklyDominates(sp, i, t, s, prev)) {
            fail(who + ": recorded dominator does not weakly dominate");
          }
          ++report.checked;
        }
      }
    }
    const Restriction surviving =
        RestrictionFrom(sp, Field(it, path, "surviving"), path + "/surviving");
    if (surviving != expected) fail("round " + std::to_string(k + 1) + ": surviving sets do not match");
    prev = surviving;
  }
  const Restriction fixpoint = RestrictionFrom(sp, Field(doc, "", "fixpoint"), "/fixpoint");
  if (fixpoint != prev) fail("fixpoint does not match the last round");
  std::vector<std::string> outcomes;
  for (int z : OutcomesOf(sp, prev)) outcomes.push_back(g.TerminalLabel(z));
  if (Strings(Field(doc, "", "outcomes"), "/outcomes") != outcomes) {
    fail("outcomes do not match the fixpoint");
  }
  if (doc.contains("certificates")) {
    int n = 0;
    for (const auto& cj : Array(doc["certificates"], "/certificates")) {
      const RationalityCertificate c =
          CertificateFrom(sp, cj, "/certificates/" + std::to_string(n++));
      const CertificateReport r = CheckRationalityCertificate(sp, c);
      if (!r.ok) {
        fail("certificate for " + g.PlayerName(c.player) + " " + sp.Name(c.player, c.strategy) +
             ": " + (r.violations.empty() ? std::string("rejected") : r.violations.front()));
      }
      ++report.checked;
    }
  }
  return report;
}

}  // namespace icbd
