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

// Command-line driver. Exit codes: 0 success, 1 analysis finding, 2 input
// error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icbd/applications.h"
#include "icbd/cardinal.h"
#include "icbd/errors.h"
#include "icbd/game.h"
#include "icbd/generator.h"
#include "icbd/io.h"
#include "icbd/oracle.h"
#include "icbd/solvers.h"
#include "icbd/strategies.h"
#include "icbd/witness.h"

namespace {

using namespace icbd;

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kInputError = 2;

std::string SetText(const StrategySpace& sp, int i, const std::vector<int>& set) {
  std::string out = "{";
  for (size_t k = 0; k < set.size(); ++k) {
    if (k > 0) out += ", ";
    out += sp.Name(i, set[k]);
  }
  return out + "}";
}

void PrintRestriction(const StrategySpace& sp, const Restriction& r, const std::string& title) {
  std::cout << title << ":";
  for (int i = 0; i < sp.NumPlayers(); ++i) {
    std::cout << " " << sp.game().PlayerName(i) << "=" << SetText(sp, i, r.sets[i]);
  }
  std::cout << "\n";
  if (r.NumProfiles() <= 64) {
    std::cout << "profiles: {";
    bool first = true;
    std::vector<int> idx(sp.NumPlayers(), 0);
    for (int64_t f = 0; f < r.NumProfiles(); ++f) {
      int64_t rest = f;
      for (int i = sp.NumPlayers() - 1; i >= 0; --i) {
        const int64_t n = static_cast<int64_t>(r.sets[i].size());
        idx[i] = r.sets[i][rest % n];
        rest /= n;
      }
      std::cout << (first ? "" : ", ") << "(";
      for (int i = 0; i < sp.NumPlayers(); ++i) std::cout << (i ? ", " : "") << sp.Name(i, idx[i]);
      std::cout << ")";
      first = false;
    }
    std::cout << "}\n";
  }
}

void PrintOutcomes(const DynamicGame& g, const std::vector<int>& outcomes) {
  std::cout << "outcomes:";
  for (int z : outcomes) std::cout << " " << g.TerminalLabel(z);
  std::cout << "\n";
}

void PrintTrace(const StrategySpace& sp, const SolveResult& res) {
  const DynamicGame& g = sp.game();
  for (size_t k = 0; k < res.trace.iterations.size(); ++k) {
    std::cout << "round " << k + 1 << ":";
    for (const auto& rec : res.trace.iterations[k].eliminated) {
      std::cout << " " << g.PlayerName(rec.player) << ":" << sp.Name(rec.player, rec.strategy);
      if (rec.info_set >= 0) std::cout << "@" << g.info_set(rec.info_set).label;
    }
    std::cout << "\n";
  }
}

int Solve(const std::string& path, const std::string& method, const std::string& utilities_path,
          const std::string& trace_path) {
  const DynamicGame g = ParseGame(ReadFile(path));
  std::cout << "method: " << method << "\n";
  if (method == "bi") {
    const BackwardInductionResult bi = BackwardInduction(g);
    PrintOutcomes(g, bi.outcomes);
    std::cout << "unique: " << (bi.unique ? "yes" : "no") << "\n";
    return kOk;
  }
  const StrategySpace sp(g);
  SolveResult res;
  std::vector<UtilityFunction> utilities;
  if (method == "icbd") {
    res = Icbd(sp);
  } else if (method == "osr") {
    res = Osr(sp);
  } else if (method == "icd") {
    if (!utilities_path.empty()) {
      utilities = ParseUtilities(g, ReadFile(utilities_path));
    } else {
      for (int i = 0; i < g.NumPlayers(); ++i) utilities.push_back(CanonicalUtility(g, i));
    }
    res = Icd(sp, utilities);
  } else {
    res = IteratedAdmissibility(sp.ToStrategicForm());
  }
  PrintTrace(sp, res);
  PrintRestriction(sp, res.fixpoint, "fixpoint");
  PrintOutcomes(g, res.outcomes);
  if (!trace_path.empty()) WriteFile(trace_path, SerializeTrace(sp, method, res, utilities));
  return kOk;
}

int Check(const std::string& path, const std::string& condition) {
  std::optional<DynamicGame> parsed;
  try {
    parsed = ParseGame(ReadFile(path));
  } catch (const IcbdError& e) {
    if (condition == "perfect-recall" && e.code() == ErrorCode::kPerfectRecallViolation) {
      std::cout << "perfect-recall: violated (" << e.what() << ")\n";
      return kFinding;
    }
    throw;
  }
  const DynamicGame& g = *parsed;
  if (condition == "perfect-recall") {
    std::cout << "perfect-recall: holds\n";
    return kOk;
  }
  if (condition == "perfect-info") {
    const bool pi = ClassifyGame(g).perfect_information;
    std::cout << "perfect-info: " << (pi ? "holds" : "violated") << "\n";
    return pi ? kOk : kFinding;
  }
  if (condition == "nrt") {
    const auto v = CheckNrt(g);
    if (!v) {
      std::cout << "nrt: holds\n";
      return kOk;
    }
    std::cout << "nrt: violated (" << g.PlayerName(v->player) << " is indifferent between "
              << g.TerminalLabel(v->z) << " and " << g.TerminalLabel(v->z2) << ")\n";
    return kFinding;
  }
  // tdi
  std::optional<StrategySpace> sp;
  try {
    sp.emplace(g);
  } catch (const IcbdError& e) {
    if (e.code() != ErrorCode::kSizeCap || !ClassifyGame(g).perfect_information) throw;
  }
  if (!sp) {
    const auto v = CheckTdiTree(g);
    std::cout << "tdi: " << (v ? "violated" : "holds") << " (decided on the tree)\n";
    return v ? kFinding : kOk;
  }
  const StrategicForm sf = sp->ToStrategicForm();
  const auto v = CheckTdi(sf);
  if (!v) {
    std::cout << "tdi: holds\n";
    return kOk;
  }
  std::cout << "tdi: violated (" << sf.players[v->player] << " is indifferent between "
            << sf.strategy_names[v->player][v->s] << " and " << sf.strategy_names[v->player][v->s2]
            << ", " << sf.players[v->other] << " is not)\n";
  return kFinding;
}

int Verify(const std::string& path, const std::string& oracle, const std::string& trace_path,
           const std::string& restriction_path) {
  const DynamicGame g = ParseGame(ReadFile(path));
  const StrategySpace sp(g);
  int status = kOk;
  if (!trace_path.empty()) {
    const TraceReplayReport rep = ReplayTrace(sp, ReadFile(trace_path));
    std::cout << "trace: " << (rep.ok ? "verified" : "FAILED") << " (" << rep.checked
              << " reasons checked)\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    if (!rep.ok) status = kFinding;
  }
  if (!oracle.empty()) {
    const OracleLevel level = oracle == "dominance"   ? OracleLevel::kDominance
                              : oracle == "icbd-step" ? OracleLevel::kIcbdStep
                                                      : OracleLevel::kWitness;
    // Either the given restriction, or every stage of the ICBD sequence.
    std::vector<Restriction> stages;
    if (!restriction_path.empty()) {
      stages.push_back(ParseRestriction(sp, ReadFile(restriction_path)));
    } else {
      stages.push_back(sp.Full());
      const SolveResult res = Icbd(sp);
      for (const auto& it : res.trace.iterations) stages.push_back(it.surviving);
    }
    int checked = 0;
    std::vector<std::string> mismatches;
    for (const Restriction& r : stages) {
      const OracleReport rep = OracleCheck(sp, r, level);
      checked += rep.checked;
      mismatches.insert(mismatches.end(), rep.mismatches.begin(), rep.mismatches.end());
    }
    std::cout << "oracle " << oracle << ": " << (mismatches.empty() ? "clean" : "MISMATCH") << " ("
              << checked << " checks over " << stages.size() << " restrictions)\n";
    for (const auto& m : mismatches) std::cout << "  " << m << "\n";
    if (!mismatches.empty()) status = kFinding;
  }
  return status;
}

int Witness(const std::string& path, const std::string& player, const std::string& strategy,
            const std::string& restriction_path, const std::string& out_path) {
  const DynamicGame g = ParseGame(ReadFile(path));
  const StrategySpace sp(g);
  int i = g.PlayerIndex(player);
  if (i < 0) {
    try {
      i = std::stoi(player);
    } catch (const std::exception&) {
      i = -1;
    }
  }
  if (i < 0 || i >= g.NumPlayers()) Fail(ErrorCode::kSchemaError, "unknown player " + player);
  const int s = sp.Find(i, strategy);
  if (s < 0) Fail(ErrorCode::kSchemaError, "unknown strategy " + strategy);
  const Restriction r =
      restriction_path.empty() ? sp.Full() : ParseRestriction(sp, ReadFile(restriction_path));
  try {
    const RationalityCertificate c = ConstructSequentialWitness(sp, i, s, r);
    const std::string text = SerializeCertificate(sp, c);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      WriteFile(out_path, text);
    }
    return kOk;
  } catch (const IcbdError& e) {
    if (e.code() != ErrorCode::kHypothesisViolated && e.code() != ErrorCode::kWitnessSearchExhausted) {
      throw;
    }
    std::cout << "no certificate: " << e.what() << "\n";
    return kFinding;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ICBD solver for finite dynamic games with ordinal preferences"};
  app.require_subcommand(1);

  std::string game, method = "icbd", utilities, trace, condition, oracle, restriction, out;
  std::string player, strategy, epsilon, input;
  uint64_t seed = 0;
  int depth = 3, actions = 3, players = 2, cap = 0;
  bool nrt = false;

  auto* solve = app.add_subcommand("solve", "Run a solution concept");
  solve->add_option("game", game, "Game file")->required();
  solve->add_option("--method", method, "Solution concept")
      ->check(CLI::IsMember({"icbd", "osr", "icd", "ia", "bi"}));
  solve->add_option("--utilities", utilities, "Utility file for icd");
  solve->add_option("--trace", trace, "Write the elimination trace here");

  auto* check = app.add_subcommand("check", "Test a structural condition");
  check->add_option("game", game, "Game file")->required();
  check->add_option("--condition", condition, "Condition")
      ->required()
      ->check(CLI::IsMember({"nrt", "tdi", "perfect-info", "perfect-recall"}));

  auto* gen = app.add_subcommand("gen", "Generate a game");
  gen->require_subcommand(1);
  auto* gen_random = gen->add_subcommand("random", "Seeded random game");
  gen_random->add_option("--seed", seed, "Seed")->required();
  gen_random->add_flag("--nrt", nrt, "Perfect information with no relevant ties");
  gen_random->add_option("--depth", depth, "Maximal depth");
  gen_random->add_option("--actions", actions, "Maximal actions per mover");
  gen_random->add_option("--players", players, "Number of players");
  gen_random->add_option("-o", out, "Output file")->required();
  auto* gen_agenda = gen->add_subcommand("agenda", "Voting game of a binary agenda");
  gen_agenda->add_option("agenda", input, "Agenda file")->required();
  gen_agenda->add_option("-o", out, "Output file")->required();
  auto* gen_burn = gen->add_subcommand("moneyburn", "Money-burning game of a base game");
  gen_burn->add_option("base", input, "Base game file")->required();
  gen_burn->add_option("--epsilon", epsilon, "Cost per burn unit, p/q")->required();
  gen_burn->add_option("--cap", cap, "Largest burn level (default ceil(spread/epsilon)+1)");
  gen_burn->add_option("-o", out, "Output file")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check against the definitions");
  verify->add_option("game", game, "Game file")->required();
  auto* oracle_opt = verify->add_option("--oracle", oracle, "Oracle level")
                         ->check(CLI::IsMember({"dominance", "icbd-step", "witness"}));
  auto* trace_opt = verify->add_option("--trace", trace, "Trace file to replay");
  verify->add_option("--restriction", restriction, "Restriction file");
  (void)oracle_opt;
  (void)trace_opt;

  auto* witness = app.add_subcommand("witness", "Sequential-rationality certificate");
  witness->add_option("game", game, "Game file")->required();
  witness->add_option("--player", player, "Player name or index")->required();
  witness->add_option("--strategy", strategy, "Strategy name")->required();
  witness->add_option("--restriction", restriction, "Restriction file");
  witness->add_option("-o", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve) return Solve(game, method, utilities, trace);
    if (*check) return Check(game, condition);
    if (*verify) {
      if (oracle.empty() && trace.empty()) {
        std::cerr << "verify needs --oracle or --trace\n";
        return kInputError;
      }
      return Verify(game, oracle, trace, restriction);
    }
    if (*witness) return Witness(game, player, strategy, restriction, out);
    if (*gen_random) {
      GeneratorSpec spec;
      spec.seed = seed;
      spec.max_depth = depth;
      spec.max_actions = actions;
      spec.player_count = players;
      spec.force_nrt = nrt;
      WriteFile(out, SerializeGame(GenerateGame(spec)));
      return kOk;
    }
    if (*gen_agenda) {
      WriteFile(out, SerializeGame(AgendaToGame(ParseAgenda(ReadFile(input))).game));
      return kOk;
    }
    if (*gen_burn) {
      const MoneyBurnBaseGame base = ParseBaseGame(ReadFile(input));
      MoneyBurnConfig config;
      config.epsilon = ParseRational(epsilon);
      config.budget_cap = cap > 0 ? cap : DefaultBudgetCap(base, config.epsilon);
      WriteFile(out, SerializeGame(MoneyBurnGame(base, config)));
      return kOk;
    }
  } catch (const IcbdError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
