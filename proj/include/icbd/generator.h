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

#ifndef ICBD_GENERATOR_H_
#define ICBD_GENERATOR_H_

#include <cstdint>

#include "icbd/game.h"
#include "icbd/rational.h"

namespace icbd {

struct GeneratorSpec {
  uint64_t seed = 0;
  int max_depth = 3;
  int max_actions = 3;
  int player_count = 2;
  Rational tie_probability = Rational(1, 4);
  bool force_nrt = false;
  bool force_perfect_info = false;
  int max_terminals = 0;  // 0: no limit
};

// Deterministic in the spec. Trees are grown top-down; without
// force_perfect_info a decision node may have several simultaneous movers.
// Ranks come from shuffling the terminals and merging neighbors into ties.
// Flags are enforced by resampling, at most 100 times, then GenerationFailed.
DynamicGame GenerateGame(const GeneratorSpec& spec);

}  // namespace icbd

#endif  // ICBD_GENERATOR_H_
