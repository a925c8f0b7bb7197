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

#ifndef ICBD_IO_H_
#define ICBD_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "icbd/applications.h"
#include "icbd/cardinal.h"
#include "icbd/game.h"
#include "icbd/solvers.h"
#include "icbd/strategies.h"
#include "icbd/witness.h"

namespace icbd {

inline constexpr int kFormatVersion = 1;

// Whole-file helpers. ReadFile throws ParseError if the file cannot be read.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& text);

// Games. Decision nodes list their movers and key children by the joint
// action labels joined with ",", first mover first. Throws ParseError on bad
// JSON, SchemaError on shape problems, and the ValidateGame errors.
DynamicGame ParseGame(std::string_view text);
std::string SerializeGame(const DynamicGame& g);

BinaryAgenda ParseAgenda(std::string_view text);
std::string SerializeAgenda(const BinaryAgenda& a);

MoneyBurnBaseGame ParseBaseGame(std::string_view text);
std::string SerializeBaseGame(const MoneyBurnBaseGame& base);

// Strategies by name; a player that is not listed keeps every strategy.
Restriction ParseRestriction(const StrategySpace& sp, std::string_view text);
std::string SerializeRestriction(const StrategySpace& sp, const Restriction& r);

// One utility per player over outcome labels.
std::vector<UtilityFunction> ParseUtilities(const DynamicGame& g, std::string_view text);
std::string SerializeUtilities(const DynamicGame& g, const std::vector<UtilityFunction>& u);

std::string SerializeCertificate(const StrategySpace& sp, const RationalityCertificate& c);
RationalityCertificate ParseCertificate(const StrategySpace& sp, std::string_view text);

// Elimination traces with every recorded reason. `utilities` is stored for
// traces whose reasons are mixtures.
std::string SerializeTrace(const StrategySpace& sp, const std::string& method,
                           const SolveResult& result,
                           const std::vector<UtilityFunction>& utilities = {});

struct TraceReplayReport {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;
};

// Re-verifies every recorded reason against the restriction it was issued
// under, and every surviving set against the eliminations.
TraceReplayReport ReplayTrace(const StrategySpace& sp, std::string_view text);

}  // namespace icbd

#endif  // ICBD_IO_H_
